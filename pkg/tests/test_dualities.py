import pytest

from heckeduality import AssumptionViolated, NotInNormalizer
from heckeduality.dualities import (build_ramification, chi_intertwiner_check, hl_analogue_check,
                                    hl_character_check, involution_check, kato_check, solomon_check,
                                    solomon_lhs)
from heckeduality.hecke_modules import (affine_one_dimensional_modules, one_dimensional_modules,
                                        principal_series, two_dimensional_modules)
from heckeduality.weyl import ClassFunction, Subgroup, irreducible_characters

from conftest import affine_hecke, finite_hecke, weyl


def test_solomon_a1_trivial():
    W = weyl("A", 1)
    lhs = solomon_lhs(W, ClassFunction.trivial(W.whole))
    assert lhs == ClassFunction.sign(W.whole)


def test_solomon_zero():
    W = weyl("B", 2)
    assert solomon_check(W, ClassFunction.zero(W.whole)).passed


@pytest.mark.parametrize("t,r", [("G", 2), ("B", 3)])
def test_solomon_other_types(t, r):
    W = weyl(t, r)
    for chi in irreducible_characters(W.whole):
        assert solomon_check(W, chi).passed
        assert not solomon_check(W, chi, corrupt=True).passed


def test_hl_character_reduces_to_solomon():
    W = weyl("A", 2)
    for chi in irreducible_characters(W.whole):
        assert hl_character_check(W, (), W.whole, chi).passed


def test_hl_character_needs_normalizer():
    W = weyl("A", 2)
    H = Subgroup.generated(W, [W.gens[2]])
    with pytest.raises(NotInNormalizer):
        hl_character_check(W, {1}, H, ClassFunction.trivial(H))


def test_kato_finite_discriminates():
    H = finite_hecke("B", 2)
    for M in one_dimensional_modules(H, {0: 4, 1: 9}) + two_dimensional_modules(H, {0: 4, 1: 9}, 1, 2):
        assert kato_check(M).passed
        assert not kato_check(M, corrupt=True).passed


def test_kato_affine_weight_lattice():
    A = affine_hecke("A", 1, "weight")
    rep = kato_check(principal_series(A, {0: 4}, [3]), bound=4)
    assert rep.passed
    assert "4" in rep.notes["witnesses"]


def test_intertwiner_a1_principal_series():
    A = affine_hecke("A", 1, "root")
    M = principal_series(A, {0: 4, 1: 9}, [5])
    rep = chi_intertwiner_check(M)
    assert rep.passed
    assert {r.witness for r in rep.records} >= {"T_s0", "T_s1", "dim of intersection of L_s"}


def test_intertwiner_omega_sign():
    A = affine_hecke("A", 1, "weight")
    for M in affine_one_dimensional_modules(A, {0: 4}):
        rep = chi_intertwiner_check(M)
        assert rep.passed
        assert any(r.witness.startswith("T_g") for r in rep.records)


def test_involution_small():
    A = affine_hecke("A", 1, "weight")
    assert involution_check(A, bound=3, parity_bound=4, box=1, pair_bound=2).passed
    assert not involution_check(A, bound=1, parity_bound=1, box=0, corrupt=True).passed


def test_ramification_degenerate():
    W = weyl("B", 2)
    rd = build_ramification(W, (), "degenerate")
    assert rd.delta == [W.datum.alpha(1), W.datum.alpha(2)]
    assert rd.R.order == 8
    assert all(rd.checks.values())
    # p_w is q(w) for the degenerate datum
    H = finite_hecke("B", 2)
    for w in W.elements:
        assert rd.p_w(w) == H.q_of(w)


def test_ramification_a3():
    W = weyl("A", 3)
    rd = build_ramification(W, {1, 3}, "full-stabilizer")
    assert rd.R.order == 2 and rd.c_trivial
    assert [W.datum.root_coords[a] for a in rd.delta] == [(0, 1, 0)]
    assert all(rd.checks.values())


def test_ramification_degenerate_needs_empty_I0():
    with pytest.raises(ValueError):
        build_ramification(weyl("A", 2), {1}, "degenerate")


def test_nontrivial_c_is_reported():
    # D4 with I0 = {1, 2}: W(Lambda) has order 2 but R(Lambda) is trivial
    W = weyl("D", 4)
    rd = build_ramification(W, {1, 2}, "full-stabilizer", require_c_trivial=False)
    assert len(rd.C) == 2 and rd.R.order == 1
    with pytest.raises(AssumptionViolated):
        build_ramification(W, {1, 2}, "full-stabilizer")
    with pytest.raises(AssumptionViolated):
        hl_analogue_check(rd, one_dimensional_modules(rd.E, {})[0])


@pytest.mark.parametrize("t,r,I0", [("A", 3, {1, 3}), ("B", 3, {1}), ("B", 3, {3}), ("B", 2, {2})])
def test_hl_analogue_nondegenerate(t, r, I0):
    rd = build_ramification(weyl(t, r), I0, "full-stabilizer")
    ids = sorted({s.id for s in rd.E.symbols.values()})
    for M in one_dimensional_modules(rd.E, {i: 9 for i in ids}):
        assert hl_analogue_check(rd, M).passed
        assert not hl_analogue_check(rd, M, corrupt=True).passed


def test_hl_analogue_degenerate_matches_kato():
    W = weyl("A", 2)
    rd = build_ramification(W, (), "degenerate")
    H = finite_hecke("A", 2)
    for M, N in zip(one_dimensional_modules(rd.E, {0: 4}), one_dimensional_modules(H, {0: 4})):
        a, b = hl_analogue_check(rd, M), kato_check(N)
        assert a.passed and b.passed
        assert [r.rhs for r in a.records if r.witness.startswith("T_")] == [r.rhs for r in b.records]
