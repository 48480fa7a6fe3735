from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckeduality import ClassFunction, NotASubgroup, NotInNormalizer, NotSaturated, Subgroup
from heckeduality.weyl import irreducible_characters, subsets

from conftest import weyl

ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("G", 2): 12, ("B", 3): 48, ("C", 3): 48}
# degrees of the irreducible characters (sorted)
DEGREES = {("A", 1): [1, 1], ("A", 2): [1, 1, 2], ("A", 3): [1, 1, 2, 3, 3], ("B", 2): [1, 1, 1, 1, 2],
           ("G", 2): [1, 1, 1, 1, 2, 2]}


@pytest.mark.parametrize("t,r", sorted(ORDERS))
def test_orders_and_longest_element(t, r):
    W = weyl(t, r)
    assert W.order == ORDERS[t, r]
    assert W.length(W.longest_element()) == len(W.datum.positive_roots)


@pytest.mark.parametrize("t,r", sorted(DEGREES))
def test_character_degrees(t, r):
    W = weyl(t, r)
    chars = irreducible_characters(W.whole)
    assert sorted(int(c(W.identity)) for c in chars) == DEGREES[t, r]
    for a in chars:
        for b in chars:
            assert a.inner(b) == (1 if a == b else 0)


def test_reduced_words_are_shortlex():
    W = weyl("A", 2)
    assert W.word(W.longest_element()) == (1, 2, 1)
    for w in W.elements:
        assert W.from_word(W.word(w)) == w
        assert len(W.word(w)) == W.length(w)


def test_double_coset_example():
    W = weyl("A", 3)
    I0 = frozenset({1, 3})
    S = W.stabilizer_s_I0(I0)
    assert S.order == 2
    C = W.c_set(I0, {1, 2, 3})
    assert len(W.double_coset_reps({1, 2, 3}, S, C)) == 1
    assert len(W.c_set(I0, I0)) == 8


def test_double_coset_needs_saturated_set():
    W = weyl("A", 2)
    with pytest.raises(NotSaturated):
        W.double_coset_reps({1}, W.whole, [W.identity])


def test_det_on_perp_outside_normalizer():
    W = weyl("A", 2)
    with pytest.raises(NotInNormalizer):
        W.det_on_perp(W.gens[2], {1})


def test_induction_from_trivial_subgroup_is_regular():
    W = weyl("B", 2)
    one = Subgroup(W, [W.identity])
    reg = ClassFunction.trivial(one).induce(W.whole)
    assert reg(W.identity) == 8
    assert all(reg(g) == 0 for g in W.elements if g != W.identity)


def test_restrict_to_non_subgroup():
    W = weyl("A", 2)
    A2 = weyl("B", 2)
    with pytest.raises(NotASubgroup):
        ClassFunction.trivial(W.whole).restrict(A2.whole)


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 2)])
def test_frobenius_reciprocity(t, r):
    W = weyl(t, r)
    G = W.whole
    for I in subsets(W.labels):
        K = W.parabolic(I)
        for chi in irreducible_characters(G):
            for psi in irreducible_characters(K):
                assert chi.inner(psi.induce(G)) == chi.restrict(K).inner(psi)


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3)])
def test_c_set_saturated(t, r):
    W = weyl(t, r)
    for I0 in [frozenset({1}), frozenset({1, 3})]:
        S = W.stabilizer_s_I0(I0)
        for I in subsets(W.labels):
            C = set(W.c_set(I0, I))
            WI = W.parabolic(I).elements
            assert {u * c * h for c in C for u in WI for h in S.elements} == C


elements = st.sampled_from(weyl("B", 3).elements)


@settings(max_examples=80, deadline=None)
@given(elements, elements)
def test_length_and_sign(a, b):
    W = weyl("B", 3)
    d = W.datum
    inv = [x for x in d.positive_roots if not d.is_positive(a(x))]
    assert W.length(a) == len(inv)
    assert W.sign(a * b) == W.sign(a) * W.sign(b)
    assert W.length(W.inverse(a)) == W.length(a)


@settings(max_examples=40, deadline=None)
@given(elements, st.sampled_from([frozenset({1}), frozenset({2, 3}), frozenset({1, 3})]))
def test_parabolic_factorization(w, I):
    W = weyl("B", 3)
    x, u = W.factor(w, I)
    assert x * u == w
    assert W.is_min_coset_rep(x, I)
    assert u in W.parabolic(I)
    assert W.length(w) == W.length(x) + W.length(u)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(weyl("A", 3).stabilizer_s_I0({1, 3}).elements),
       st.sampled_from(weyl("A", 3).stabilizer_s_I0({1, 3}).elements))
def test_det_on_perp_multiplicative(a, b):
    W = weyl("A", 3)
    assert W.det_on_perp(a * b, {1, 3}) == W.det_on_perp(a, {1, 3}) * W.det_on_perp(b, {1, 3})
