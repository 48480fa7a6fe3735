import pytest
from hypothesis import given, settings, strategies as st

from heckeduality import EmptySphere
from heckeduality.coxeter_complex import (build_complex, build_subcomplex, chain_complex, complex_check,
                                          expected_lefschetz, fixed_coset_count, homology_characters,
                                          induced_coset_count, lefschetz)
from heckeduality.weyl import ClassFunction, subsets

from conftest import weyl


def test_a2_hexagon():
    W = weyl("A", 2)
    cx = build_complex(W)
    cc = chain_complex(cx)
    assert len(cx) == 12
    assert cc.dims() == (6, 6)
    from heckeduality import linalg
    assert linalg.rank(cc.boundary[1]) == 5


def test_simplex_vertices():
    W = weyl("A", 3)
    cx = build_complex(W)
    for s in cx.simplices:
        verts = cx.vertices(s)
        assert len(verts) == 3 - len(s[0])
        assert all(cx.is_face(v, s) for v in verts)


def test_empty_I0_gives_full_complex():
    W = weyl("B", 2)
    assert build_subcomplex(W, ()).simplices == build_complex(W).simplices


def test_zero_sphere():
    W = weyl("A", 3)
    cx = build_subcomplex(W, {1, 3})
    assert len(cx) == 2
    assert chain_complex(cx).betti() == (2,)


def test_I0_equal_S_rejected():
    with pytest.raises(EmptySphere):
        build_subcomplex(weyl("A", 2), {1, 2})


@pytest.mark.parametrize("t,r", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_sphere_homology(t, r):
    W = weyl(t, r)
    cc = chain_complex(build_complex(W))
    assert cc.boundary_squared_zero()
    assert cc.euler_characteristic() == 1 + (-1) ** (r - 1)
    chars = homology_characters(cc, W.whole)
    assert chars[0] == ClassFunction.trivial(W.whole)
    assert chars[-1] == ClassFunction.sign(W.whole)
    assert all(c == ClassFunction.zero(W.whole) for c in chars[1:-1])


def test_reflection_lefschetz():
    W = weyl("A", 3)
    cc = chain_complex(build_complex(W))
    for s in W.gens.values():
        assert set(lefschetz(cc, s)) == {1 + (-1) ** (3 - 2)}
    assert set(lefschetz(cc, W.identity)) == {2}


def test_subcomplex_lefschetz_has_det_factor():
    W = weyl("B", 3)
    cx = build_subcomplex(W, {1})
    cc = chain_complex(cx)
    H = W.stabilizer_s_I0({1})
    values = {h: lefschetz(cc, h) for h in H.elements}
    for h, v in values.items():
        assert set(v) == {expected_lefschetz(cx, h)}
    assert {v[0] for v in values.values()} == {0, 2}


def test_fixed_coset_identity_examples():
    W = weyl("A", 3)
    cx = build_subcomplex(W, {1, 3})
    H = W.stabilizer_s_I0({1, 3})
    h = H.elements[1]
    for I in subsets(W.labels):
        if len(I) < 3:
            assert fixed_coset_count(cx, h, I) == induced_coset_count(cx, H, h, I)
    full = build_complex(W)
    assert fixed_coset_count(full, W.identity, ()) == 24


@pytest.mark.parametrize("I0", [(), (1,), (2,), (1, 3)])
def test_complex_check_a3(I0):
    W = weyl("A", 3)
    assert complex_check(W, I0).passed
    assert not complex_check(W, I0, corrupt=True).passed


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(weyl("A", 3).elements))
def test_equivariance(g):
    cc = chain_complex(build_complex(weyl("A", 3)))
    assert cc.equivariant(g)
