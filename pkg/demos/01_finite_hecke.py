"""A first look at the finite Hecke algebra of type B2.

We multiply a few basis elements, apply the involution T_w -> (-q_w) T_(w^-1)^-1
and check Solomon's identity for every irreducible character of W.
"""

from heckeduality import HeckeAlgebra, WeylGroup, build_root_datum
from heckeduality.dualities import solomon_check
from heckeduality.weyl import irreducible_characters

W = WeylGroup(build_root_datum("B", 2, "root"))
H = HeckeAlgebra.finite(W)
print(f"|W(B2)| = {W.order}")

# T_1 squared sits in the span of T_e and T_1
T1 = H.T_gen(1)
print("T_1 * T_1 =", T1 * T1)
print("T_1 * T_2 * T_1 * T_2 =", H.T_word((1, 2, 1, 2)))

# the involution is an algebra map of order two
x = H.T_word((1, 2))
print("star(T_1 T_2) =", H.star(x))
print("star applied twice gives back x:", H.star(H.star(x)) == x)

for k, chi in enumerate(irreducible_characters(W.whole)):
    rep = solomon_check(W, chi)
    print(f"chi{k}: Solomon identity {'holds' if rep.passed else 'FAILS'} ({len(rep.records)} records)")
