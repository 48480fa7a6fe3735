"""The relative Howlett-Lehrer analogue for A3 with I0 = {1, 3}.

The stabilizer of I0 contributes a reflection subgroup R(Lambda) of order two,
whose Hecke algebra E carries its own parameter.  Each one-dimensional
E-module is checked against the twisted trace formula.
"""

from heckeduality import WeylGroup, build_root_datum
from heckeduality.dualities import build_ramification, hl_analogue_check
from heckeduality.hecke_modules import one_dimensional_modules

W = WeylGroup(build_root_datum("A", 3, "root"))
rd = build_ramification(W, {1, 3}, "full-stabilizer")
print(rd.describe())

for M in one_dimensional_modules(rd.E, {0: 9}):
    rep = hl_analogue_check(rd, M)
    print(f"{M.name}: {'PASS' if rep.passed else 'FAIL'} over {len(rep.records)} records")
