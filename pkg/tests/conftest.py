from functools import lru_cache

import pytest

from heckeduality import AffineHeckeAlgebra, AffineWeylGroup, HeckeAlgebra, WeylGroup, build_root_datum


@lru_cache(maxsize=None)
def weyl(t, r):
    return WeylGroup(build_root_datum(t, r))


@lru_cache(maxsize=None)
def affine(t, r, lattice="root"):
    return AffineWeylGroup(build_root_datum(t, r, lattice))


@lru_cache(maxsize=None)
def affine_hecke(t, r, lattice="root"):
    return AffineHeckeAlgebra(affine(t, r, lattice))


@lru_cache(maxsize=None)
def finite_hecke(t, r):
    return HeckeAlgebra.finite(weyl(t, r))


@pytest.fixture
def W():
    return weyl
