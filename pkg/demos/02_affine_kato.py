"""Kato's duality for the affine Hecke algebra of type A1.

Build the principal series at a generic point and a one-dimensional module,
then compare traces of D[M] and the star-twist of M on every T_w with l(w) <= 6.
"""

from heckeduality import AffineHeckeAlgebra, AffineWeylGroup, build_root_datum
from heckeduality.dualities import kato_check
from heckeduality.hecke_modules import affine_one_dimensional_modules, principal_series

A = AffineHeckeAlgebra(AffineWeylGroup(build_root_datum("A", 1, "weight")))
qv = {s.id: 4 for s in A.symbols.values()}

M = principal_series(A, qv, [3])
print(f"principal series at t = 3: dimension {M.dim}")
rep = kato_check(M, 6)
print(f"  D[M] = [M*] on {len(rep.records)} trace witnesses: {rep.passed}")

for N in affine_one_dimensional_modules(A, qv):
    rep = kato_check(N, 6)
    print(f"1-dim module {N.name}: {rep.passed}")

# flipping the sign of the dual side has to be caught
bad = kato_check(affine_one_dimensional_modules(A, qv)[0], 6, corrupt=True)
print("with the sign flipped, first discrepancy at", bad.first_failure().witness)
