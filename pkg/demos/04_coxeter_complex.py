"""Homology of the Coxeter complex of B3 and of a subcomplex.

The full complex is a 2-sphere; removing the directions of I0 = {1}
leaves a 1-sphere.  The Lefschetz numbers match 1 + (-1)^top det(h).
"""

from heckeduality import WeylGroup, build_root_datum
from heckeduality.coxeter_complex import build_subcomplex, chain_complex, complex_check

W = WeylGroup(build_root_datum("B", 3, "root"))
for I0 in [(), (1,)]:
    cc = chain_complex(build_subcomplex(W, I0))
    print(f"I0 = {list(I0)}: chain dimensions {cc.dims()}, betti numbers {cc.betti()}")
    rep = complex_check(W, I0)
    print(f"  all {len(rep.records)} identities hold: {rep.passed}")
