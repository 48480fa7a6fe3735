"""The Coxeter complex of W and its I0-perp subcomplex.

Simplices are the cosets x W_I with I a proper subset of S, keyed by
(I, minimal representative x).  The simplex x W_I has the vertices
x W_(S - {s}) for s outside I and is oriented by increasing labels.

The subcomplex for I0 keeps the cosets x W_I with x^-1 in C_I0(I); this
condition is stable under x -> x u for u in W_I, so it is well defined on
cosets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .errors import EmptySphere, NotInNormalizer
from .report import VerificationReport
from .weyl import ClassFunction, Subgroup, WeylElement, WeylGroup, subsets

Simplex = Tuple[FrozenSet[int], WeylElement]


@dataclass
class CoxeterComplex:
    W: WeylGroup
    I0: FrozenSet[int]
    simplices: List[Simplex]

    def __post_init__(self):
        self.index = {s: k for k, s in enumerate(self.simplices)}

    @property
    def n(self) -> int:
        return len(self.W.labels)

    def degree(self, simplex: Simplex) -> int:
        return self.n - len(simplex[0]) - 1

    @property
    def top_degree(self) -> int:
        return self.n - len(self.I0) - 1

    def key(self, I, x) -> Simplex:
        I = frozenset(I)
        return I, self.W.factor(x, I)[0]

    def vertices(self, simplex: Simplex) -> List[Simplex]:
        I, x = simplex
        S = frozenset(self.W.labels)
        return [self.key(S - {s}, x) for s in sorted(S - I)]

    def is_face(self, a: Simplex, b: Simplex) -> bool:
        """a is a face of b: x_a W_Ia contains x_b W_Ib."""
        (Ia, xa), (Ib, xb) = a, b
        return Ib <= Ia and self.key(Ia, xb) == a

    def act(self, g: WeylElement, simplex: Simplex) -> Simplex:
        I, x = simplex
        return self.key(I, g * x)

    def of_degree(self, r: int) -> List[Simplex]:
        return [s for s in self.simplices if self.degree(s) == r]

    def fixed(self, g: WeylElement) -> List[Simplex]:
        return [s for s in self.simplices if self.act(g, s) == s]

    def __len__(self):
        return len(self.simplices)


def build_complex(W: WeylGroup) -> CoxeterComplex:
    return build_subcomplex(W, ())


def build_subcomplex(W: WeylGroup, I0) -> CoxeterComplex:
    I0 = frozenset(I0)
    S = frozenset(W.labels)
    if I0 >= S:
        raise EmptySphere("I0 = S gives the empty sphere")
    out = []
    for I in subsets(S):
        if I == S:
            continue
        for x in W.minimal_coset_reps(I):
            if W.maps_into_span(W.inverse(x), I0, I):
                out.append((I, x))
    out.sort(key=lambda s: (len(S) - len(s[0]), sorted(s[0]), W.key(s[1])))
    return CoxeterComplex(W, I0, out)


@dataclass
class ChainComplexQ:
    cx: CoxeterComplex
    bases: Dict[int, List[Simplex]]
    boundary: Dict[int, linalg.Matrix]      # r -> matrix C_r -> C_(r-1)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.bases)

    def dims(self) -> Tuple[int, ...]:
        return tuple(len(self.bases[r]) for r in self.degrees)

    def euler_characteristic(self) -> int:
        return sum((-1) ** r * len(self.bases[r]) for r in self.degrees)

    def action(self, g: WeylElement, r: int) -> linalg.Matrix:
        basis = self.bases[r]
        pos = {s: k for k, s in enumerate(basis)}
        m = linalg.zeros(len(basis), len(basis))
        for k, s in enumerate(basis):
            m[pos[self.cx.act(g, s)], k] = 1
        return m

    def boundary_squared_zero(self) -> bool:
        for r in self.degrees:
            if r - 1 in self.boundary and r in self.boundary:
                d1, d0 = self.boundary[r], self.boundary[r - 1]
                if (d0 * d1) != linalg.zeros(d0.nrows(), d1.ncols()):
                    return False
        return True

    def equivariant(self, g: WeylElement) -> bool:
        for r, d in self.boundary.items():
            if r - 1 in self.bases and d.nrows():
                if self.action(g, r - 1) * d != d * self.action(g, r):
                    return False
        return True

    def __post_init__(self):
        self._cache: Dict = {}

    def _cycles(self, r):
        if ("Z", r) not in self._cache:
            self._cache[("Z", r)] = self._compute_cycles(r)
        return self._cache[("Z", r)]

    def _boundaries(self, r):
        if ("B", r) not in self._cache:
            self._cache[("B", r)] = self._compute_boundaries(r)
        return self._cache[("B", r)]

    def _compute_cycles(self, r):
        d = self.boundary.get(r)
        n = len(self.bases[r])
        if d is None or d.nrows() == 0:
            return linalg.identity(n)
        return linalg.nullspace(d)

    def _compute_boundaries(self, r):
        d = self.boundary.get(r + 1)
        if d is None or d.ncols() == 0:
            return linalg.zeros(len(self.bases[r]), 0)
        return linalg.column_space(d)

    def betti(self) -> Tuple[int, ...]:
        return tuple(self._cycles(r).ncols() - self._boundaries(r).ncols() for r in self.degrees)

    def homology_trace(self, g: WeylElement, r: int) -> Fraction:
        """tr(g | Z_r) - tr(g | B_r)."""
        a = self.action(g, r)
        out = Fraction(0)
        for basis, sgn in ((self._cycles(r), 1), (self._boundaries(r), -1)):
            if basis.ncols():
                out += sgn * linalg.trace(linalg.solve_right(basis, a * basis))
        return out


def chain_complex(cx: CoxeterComplex) -> ChainComplexQ:
    """Rational chains; the face opposite the i-th vertex gets the sign (-1)^i."""
    S = frozenset(cx.W.labels)
    bases = {r: cx.of_degree(r) for r in range(0, cx.top_degree + 1)}
    boundary = {}
    for r in range(1, cx.top_degree + 1):
        rows = {s: k for k, s in enumerate(bases[r - 1])}
        m = linalg.zeros(len(bases[r - 1]), len(bases[r]))
        for k, (I, x) in enumerate(bases[r]):
            for i, s in enumerate(sorted(S - I)):
                face = cx.key(I | {s}, x)
                m[rows[face], k] += (-1) ** i
        boundary[r] = m
    return ChainComplexQ(cx, bases, boundary)


def homology_characters(cc: ChainComplexQ, group: Subgroup) -> List[ClassFunction]:
    """Characters of the group on H_0, ..., H_top."""
    return [ClassFunction(group, [cc.homology_trace(g, r) for g in group.class_reps]) for r in cc.degrees]


def lefschetz(cc: ChainComplexQ, g: WeylElement) -> Tuple[Fraction, Fraction, int]:
    """(chain alternating trace, homology alternating trace, Euler characteristic of the fixed simplices)."""
    chain = sum((Fraction((-1) ** r) * linalg.trace(cc.action(g, r)) for r in cc.degrees), Fraction(0))
    hom = sum((Fraction((-1) ** r) * cc.homology_trace(g, r) for r in cc.degrees), Fraction(0))
    fix = sum((-1) ** cc.cx.degree(s) for s in cc.cx.fixed(g))
    return chain, hom, fix


def expected_lefschetz(cx: CoxeterComplex, h: WeylElement) -> int:
    """1 + (-1)^(n - |I0| - 1) det(h on I0-perp)."""
    return 1 + (-1) ** cx.top_degree * cx.W.det_on_perp(h, cx.I0)


def fixed_coset_count(cx: CoxeterComplex, h: WeylElement, I) -> int:
    """Number of cosets x W_I of the complex fixed by h."""
    I = frozenset(I)
    return sum(1 for s in cx.simplices if s[0] == I and cx.act(h, s) == s)


def induced_coset_count(cx: CoxeterComplex, H: Subgroup, h: WeylElement, I) -> Fraction:
    """Sum over W_I w H in C_I0(I) of (Ind from H cap W_I^w to H of 1)(h)."""
    W = cx.W
    C = W.c_set(cx.I0, I)
    if not C:
        return Fraction(0)
    out = Fraction(0)
    for w in W.double_coset_reps(I, H, C):
        K = W.conjugate_parabolic(w, I).intersect(H)
        # (Ind_K^H 1)(h) = #{cosets gK fixed by h}
        out += Fraction(sum(1 for g in H.elements if W.inverse(g) * h * g in K.element_set), K.order)
    return out


def complex_check(W: WeylGroup, I0=(), H: Optional[Subgroup] = None, corrupt: bool = False) -> VerificationReport:
    """Sphere homology, Lefschetz triple agreement and the fixed coset identity."""
    I0 = frozenset(I0)
    cx = build_subcomplex(W, I0)
    cc = chain_complex(cx)
    if H is None:
        H = W.whole if not I0 else W.stabilizer_s_I0(I0)
    for h in H.elements:
        if not W.normalizes(h, I0):
            raise NotInNormalizer("H must normalize W_I0")
    sg = -1 if corrupt else 1
    rep = VerificationReport("complex", dict(W.datum.descriptor(), I0=sorted(I0), H_order=H.order))
    rep.notes["chain dimensions"] = list(cc.dims())
    betti = cc.betti()
    rep.notes["betti"] = list(betti)
    top = cx.top_degree
    rep.add("boundary squared", cc.boundary_squared_zero(), True)
    rep.add("equivariance", all(cc.equivariant(g) for g in H.elements), True)
    sphere = tuple((1 if r == top else 0) + (1 if r == 0 else 0) for r in cc.degrees)
    rep.add("betti numbers of a sphere", list(betti), list(sphere))
    rep.add("euler characteristic", cc.euler_characteristic(), 1 + (-1) ** top)
    chars = homology_characters(cc, H)
    for r, ch in zip(cc.degrees, chars):
        if not I0:
            want = ClassFunction.zero(H)
            if r == 0:
                want = want + ClassFunction.trivial(H)
            if r == top:
                want = want + ClassFunction.sign(H) * sg
            rep.add(f"H_{r} character", list(ch.values), list(want.values))
    for h in H.elements:
        chain, hom, fix = lefschetz(cc, h)
        lab = "".join(f"s{i}" for i in W.word(h)) or "e"
        exp = 1 + sg * (-1) ** top * W.det_on_perp(h, I0)
        rep.add(f"lefschetz h={lab}", [chain, hom, fix], [exp, exp, exp])
    S = frozenset(W.labels)
    for I in subsets(S):
        if I == S:
            continue
        for h in H.elements:
            lab = "".join(f"s{i}" for i in W.word(h)) or "e"
            rep.add(f"fixed cosets I={sorted(I)} h={lab}", fixed_coset_count(cx, h, I),
                    induced_coset_count(cx, H, h, I))
    return rep
