from fractions import Fraction

import pytest

from heckeduality import IllegalCharacter, NotAModule
from heckeduality.hecke_modules import (affine_one_dimensional_modules, character_module, d_operator,
                                        from_matrices, ind, one_dimensional_modules, principal_series, res,
                                        twist_star, two_dimensional_modules)

from conftest import affine_hecke, finite_hecke


def test_one_dimensional_counts():
    assert len(one_dimensional_modules(finite_hecke("A", 2), {0: 4})) == 2
    assert len(one_dimensional_modules(finite_hecke("B", 2), {0: 4, 1: 9})) == 4
    assert len(affine_one_dimensional_modules(affine_hecke("B", 2, "root"), {0: 4, 1: 9, 2: 25})) == 8


def test_b2_two_dimensional_module():
    H = finite_hecke("B", 2)
    (M,) = two_dimensional_modules(H, {0: 4, 1: 9}, 1, 2)
    assert M.relation_failures() == []
    assert M.trace(H.system.identity) == 2


def test_bad_matrices_rejected():
    H = finite_hecke("A", 1)
    with pytest.raises(NotAModule):
        from_matrices(H, {0: 4}, {1: [[2]]})


def test_character_needs_nonzero_values():
    A = affine_hecke("A", 1, "root")
    with pytest.raises(IllegalCharacter):
        character_module(A, {0: 4, 1: 4}, [0])


@pytest.mark.parametrize("case,q,t", [(("A", 1, "root"), {0: 4, 1: 9}, [3]), (("A", 1, "weight"), {0: 4}, [3]),
                                      (("A", 2, "root"), {0: 4}, [3, 5])])
def test_principal_series_is_a_module(case, q, t):
    A = affine_hecke(*case)
    M = principal_series(A, q, t)
    assert M.dim == A.W.order
    assert M.relation_failures() == []
    assert twist_star(M).relation_failures() == []


def test_principal_series_theta_trace():
    # theta_x acts on Ind with eigenvalues t^(w x)
    A = affine_hecke("A", 1, "weight")
    M = principal_series(A, {0: 4}, [3])
    from heckeduality import linalg
    assert linalg.trace(M.theta_matrix((1,))) == 3 + Fraction(1, 3)


def test_finite_induction_dimensions():
    H = finite_hecke("A", 3)
    M = one_dimensional_modules(H, {0: 4})[0]
    for I, dim in [((), 24), ((1,), 12), ((1, 3), 6), ((1, 2, 3), 1)]:
        N = ind(res(M, I), I)
        assert N.dim == dim
        assert N.relation_failures() == []


def test_d_operator_has_all_subsets():
    H = finite_hecke("B", 2)
    M = one_dimensional_modules(H, {0: 4, 1: 9})[0]
    assert [d for _, d in d_operator(M).dims()] == [8, 4, 4, 1]


def test_twist_swaps_one_dimensional_modules():
    H = finite_hecke("B", 2)
    mods = one_dimensional_modules(H, {0: 4, 1: 9})
    for M in mods:
        S = twist_star(M)
        match = [N for N in mods if all(N.T[s] == S.T[s] for s in H.system.labels)]
        assert len(match) == 1 and match[0].name != M.name


def test_affine_twist_is_involutive():
    A = affine_hecke("A", 1, "weight")
    for M in affine_one_dimensional_modules(A, {0: 9}):
        SS = twist_star(twist_star(M))
        for w in A.G.ball(3):
            assert SS.trace(w) == M.trace(w)
