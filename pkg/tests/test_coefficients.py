from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckeduality import IllegalParameter, LaurentPoly, NonInvertibleCoefficient, specialize
from heckeduality.coefficients import exact_sqrt, v_values

V0, V1 = LaurentPoly.v(0), LaurentPoly.v(1)


def test_quadratic_relation_factors():
    q = LaurentPoly.q(0)
    assert (q - 1) * (q + 1) == q * q - 1
    assert str(q - 1) == "q0 - 1"


def test_q_is_v_squared():
    assert LaurentPoly.q(0) == V0 ** 2
    assert LaurentPoly.q(1, -1) == V1 ** -2


def test_monomial_inverse():
    m = LaurentPoly.monomial({0: 3, 1: -2}, Fraction(2, 3))
    assert m * m.invert() == LaurentPoly.const(1)


def test_non_monomial_not_invertible():
    with pytest.raises(NonInvertibleCoefficient):
        (V0 + 1).invert()


def test_zero_normalizes():
    assert (V0 - V0).is_zero()
    assert V0 - V0 == LaurentPoly.const(0)


def test_specialize_q_values():
    p = LaurentPoly.q(0) * 2 - V1
    assert specialize(p, {0: 4, 1: 9}) == 8 - 3


def test_specialize_v_values():
    assert specialize(V0 ** -1, {0: Fraction(3, 2)}, v_given=True) == Fraction(2, 3)


@pytest.mark.parametrize("q", [0, -4, 2, Fraction(1, 2)])
def test_illegal_square_roots(q):
    with pytest.raises(IllegalParameter):
        exact_sqrt(q)


def test_q_equal_one_rejected():
    with pytest.raises(IllegalParameter):
        v_values({0: 1})


def test_sqrt_monomial():
    assert LaurentPoly.monomial({0: 4, 1: -2}).sqrt_monomial() == LaurentPoly.monomial({0: 2, 1: -1})


small = st.integers(-3, 3)
polys = st.lists(st.tuples(small, small, st.integers(-4, 4)), max_size=4).map(
    lambda ts: sum((LaurentPoly.monomial({0: a, 1: b}, c) for a, b, c in ts), LaurentPoly.const(0)))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == LaurentPoly.const(0)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.sampled_from([Fraction(2), Fraction(3), Fraction(1, 2)]),
       st.sampled_from([Fraction(5), Fraction(1, 3)]))
def test_specialization_is_a_ring_map(a, b, x, y):
    vals = {0: x, 1: y}
    sa, sb = specialize(a, vals, v_given=True), specialize(b, vals, v_given=True)
    assert specialize(a * b, vals, v_given=True) == sa * sb
    assert specialize(a + b, vals, v_given=True) == sa + sb


@settings(max_examples=40, deadline=None)
@given(polys)
def test_substitution_identity(a):
    assert a.substitute({0: V0, 1: V1}) == a
