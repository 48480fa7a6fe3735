"""Exact rational linear algebra on top of python-flint's ``fmpq_mat``."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import flint

Matrix = flint.fmpq_mat


def to_fmpq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def matrix(rows: Sequence[Sequence]) -> Matrix:
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    return flint.fmpq_mat(m, n, [to_fmpq(x) for r in rows for x in r])


def identity(n: int) -> Matrix:
    m = flint.fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def zeros(m: int, n: int) -> Matrix:
    return flint.fmpq_mat(m, n)


def scalar(c, n: int) -> Matrix:
    return identity(n) * to_fmpq(c)


def rows_of(m: Matrix) -> List[List[Fraction]]:
    return [[to_fraction(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def trace(m: Matrix) -> Fraction:
    t = flint.fmpq(0)
    for i in range(min(m.nrows(), m.ncols())):
        t += m[i, i]
    return to_fraction(t)


def inverse(m: Matrix) -> Matrix:
    return m.inv()


def rank(m: Matrix) -> int:
    return m.rank()


def nullspace(m: Matrix) -> Matrix:
    """Columns form a basis of the kernel of ``m``."""
    n = m.ncols()
    if m.nrows() == 0:
        return identity(n)
    rref, r = m.rref()
    pivots = []
    row = 0
    for j in range(n):
        if row < r and rref[row, j] != 0:
            pivots.append(j)
            row += 1
    free = [j for j in range(n) if j not in pivots]
    out = flint.fmpq_mat(n, len(free))
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, p in enumerate(pivots):
            out[p, k] = -rref[i, f]
    return out


def column_space(m: Matrix) -> Matrix:
    """Columns of ``m`` forming a basis of its column space."""
    if m.ncols() == 0:
        return m
    rref, r = m.transpose().rref()
    out = flint.fmpq_mat(m.nrows(), r)
    for j in range(r):
        for i in range(m.nrows()):
            out[i, j] = rref[j, i]
    return out


def solve_right(basis: Matrix, image: Matrix) -> Matrix:
    """Solve ``basis * A = image`` for ``A``; ``basis`` has independent columns."""
    k = basis.ncols()
    if k == 0:
        return flint.fmpq_mat(0, image.ncols())
    # least-squares style normal equations are exact here
    bt = basis.transpose()
    a = (bt * basis).solve(bt * image)
    if basis * a != image:
        raise ValueError("image is not in the span of the basis")
    return a


def hstack(mats: Sequence[Matrix], nrows: int) -> Matrix:
    ncols = sum(m.ncols() for m in mats)
    out = flint.fmpq_mat(nrows, ncols)
    c0 = 0
    for m in mats:
        for i in range(nrows):
            for j in range(m.ncols()):
                out[i, c0 + j] = m[i, j]
        c0 += m.ncols()
    return out


def frac_solve(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve the square system ``a x = b`` over the rationals."""
    m = matrix(a)
    rhs = matrix([[x] for x in b])
    sol = m.solve(rhs)
    return [to_fraction(sol[i, 0]) for i in range(sol.nrows())]


def frac_det(a: Sequence[Sequence]) -> Fraction:
    if not a:
        return Fraction(1)
    return to_fraction(matrix(a).det())
