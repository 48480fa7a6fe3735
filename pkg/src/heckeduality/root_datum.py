"""Root data (X, R, Y, R^vee) for the irreducible types A, B, C, D, G2.

X and Y are both realized as Z^n with the dot product as pairing.  Two
realizations are offered:

* ``root``: X is the root lattice, the simple roots are the standard basis
  and simple coroot j is column j of the Cartan matrix;
* ``weight``: X is the weight lattice, the simple coroots are the standard
  basis and simple root i is row i of the Cartan matrix.

Cartan matrices follow ``A[i][j] = <alpha_i, alpha_j^vee>``.  Simple roots
and generators are labelled 1..n; label 0 is reserved for s0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Mapping, Optional, Tuple

from .coefficients import LaurentPoly, ParamSymbol
from .errors import InconsistentParameters, NotARoot, UnsupportedType
from .linalg import frac_solve

Vec = Tuple[int, ...]


def pair(x, y) -> int:
    return sum(a * b for a, b in zip(x, y))


def cartan_matrix(cartan_type: str, rank: int) -> List[List[int]]:
    t = cartan_type.upper()
    n = rank
    if t == "G":
        t = "G2"
    if t == "G2":
        if n != 2:
            raise UnsupportedType("G2 has rank 2")
        # alpha_1 short, alpha_2 long
        return [[2, -1], [-3, 2]]
    if n < 1 or n > 4:
        raise UnsupportedType(f"rank {n} outside the supported range 1..4")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if t in ("A", "B", "C"):
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if t == "B" and n >= 2:
            # alpha_n short
            a[n - 2][n - 1] = -2
        elif t == "C" and n >= 2:
            # alpha_n long
            a[n - 1][n - 2] = -2
        return a
    if t == "D":
        if n < 4:
            raise UnsupportedType("type D needs rank >= 4")
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    raise UnsupportedType(f"unknown Cartan type {cartan_type!r}")


class RootDatum:
    """A based root datum together with its enumerated root system."""

    def __init__(self, cartan_type: str, rank: int, lattice_kind: str = "root"):
        if lattice_kind not in ("root", "weight"):
            raise UnsupportedType(f"lattice kind must be 'root' or 'weight', not {lattice_kind!r}")
        self.cartan_type = "G2" if cartan_type.upper() in ("G", "G2") else cartan_type.upper()
        self.rank = rank
        self.lattice_kind = lattice_kind
        self.cartan = tuple(tuple(r) for r in cartan_matrix(cartan_type, rank))
        n = rank
        unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        if lattice_kind == "root":
            self.simple_roots: Tuple[Vec, ...] = tuple(unit)
            self.simple_coroots: Tuple[Vec, ...] = tuple(
                tuple(self.cartan[i][j] for i in range(n)) for j in range(n))
        else:
            self.simple_roots = tuple(tuple(self.cartan[i]) for i in range(n))
            self.simple_coroots = tuple(unit)
        self._enumerate()
        self._validate()

    # construction helpers
    def _enumerate(self):
        n = self.rank
        coroot_of: Dict[Vec, Vec] = {}
        root_coords: Dict[Vec, Vec] = {}
        coroot_coords: Dict[Vec, Vec] = {}
        queue = deque()
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            a, c = self.simple_roots[i], self.simple_coroots[i]
            coroot_of[a] = c
            root_coords[a] = e
            coroot_coords[c] = e
            queue.append(a)
        while queue:
            a = queue.popleft()
            c = coroot_of[a]
            ra, rc = root_coords[a], coroot_coords[c]
            for i in range(n):
                ai, ci = self.simple_roots[i], self.simple_coroots[i]
                k = pair(a, ci)
                m = pair(ai, c)
                b = tuple(x - k * y for x, y in zip(a, ai))
                if b in coroot_of:
                    continue
                coroot_of[b] = tuple(x - m * y for x, y in zip(c, ci))
                root_coords[b] = tuple(x - (k if j == i else 0) for j, x in enumerate(ra))
                coroot_coords[coroot_of[b]] = tuple(x - (m if j == i else 0) for j, x in enumerate(rc))
                queue.append(b)
        self.coroot_of = coroot_of
        self.root_coords = root_coords
        self.coroot_coords = coroot_coords
        pos = [a for a in coroot_of if all(x >= 0 for x in root_coords[a])]
        # order: height, then coordinates; gives reproducible enumeration
        pos.sort(key=lambda a: (sum(root_coords[a]), root_coords[a]))
        self.positive_roots: Tuple[Vec, ...] = tuple(pos)
        self.roots: Tuple[Vec, ...] = tuple(pos) + tuple(tuple(-x for x in a) for a in pos)
        self._posset = frozenset(pos)
        self._orbits()

    def _orbits(self):
        orbit: Dict[Vec, int] = {}
        k = 0
        for a in self.roots:
            if a in orbit:
                continue
            stack = [a]
            orbit[a] = k
            while stack:
                b = stack.pop()
                for i in range(self.rank):
                    c = self.reflect_simple(i + 1, b)
                    if c not in orbit:
                        orbit[c] = k
                        stack.append(c)
            k += 1
        self.orbit_of = orbit
        self.num_orbits = k

    def _validate(self):
        n = self.rank
        for i in range(n):
            for j in range(n):
                if pair(self.simple_roots[i], self.simple_coroots[j]) != self.cartan[i][j]:
                    raise UnsupportedType("pairing does not reproduce the Cartan matrix")
        rs = set(self.roots)
        if rs != set(self.coroot_of):
            raise UnsupportedType("positive roots do not split R")
        for i in range(n):
            if {self.reflect_simple(i + 1, a) for a in rs} != rs:
                raise UnsupportedType("a simple reflection does not permute R")
        for a in rs:
            if pair(a, self.coroot_of[a]) != 2:
                raise UnsupportedType("<a, a^vee> != 2")

    # basic queries
    def is_root(self, a) -> bool:
        return tuple(a) in self.coroot_of

    def is_positive(self, a) -> bool:
        return tuple(a) in self._posset

    def coroot(self, a) -> Vec:
        a = tuple(a)
        if a not in self.coroot_of:
            raise NotARoot(f"{a} is not a root")
        return self.coroot_of[a]

    def alpha(self, i: int) -> Vec:
        """Simple root with label ``i`` (1-based)."""
        return self.simple_roots[i - 1]

    def alpha_vee(self, i: int) -> Vec:
        return self.simple_coroots[i - 1]

    def reflect(self, a, x) -> Vec:
        """s_a(x) = x - <x, a^vee> a."""
        c = self.coroot(a)
        k = pair(x, c)
        return tuple(xi - k * ai for xi, ai in zip(x, a))

    def reflect_simple(self, i: int, x) -> Vec:
        a, c = self.simple_roots[i - 1], self.simple_coroots[i - 1]
        k = pair(x, c)
        return tuple(xi - k * ai for xi, ai in zip(x, a))

    def reflect_dual(self, a, y) -> Vec:
        """s_a acting on Y: y - <a, y> a^vee."""
        c = self.coroot(a)
        k = pair(a, y)
        return tuple(yi - k * ci for yi, ci in zip(y, c))

    def support(self, a) -> frozenset:
        """Labels of the simple roots occurring in the root ``a``."""
        return frozenset(i + 1 for i, x in enumerate(self.root_coords[tuple(a)]) if x)

    def in_span(self, a, labels) -> bool:
        return self.support(a) <= frozenset(labels)

    def divisibility(self, a) -> int:
        """Largest d with a^vee in d*Y, i.e. the index of <X, a^vee> in Z."""
        g = 0
        for x in self.coroot(a):
            g = gcd(g, x)
        return g

    def coroot_in_2Y(self, a) -> bool:
        return self.divisibility(a) % 2 == 0

    def is_dominant(self, x) -> bool:
        return all(pair(x, c) >= 0 for c in self.simple_coroots)

    # distinguished elements
    @property
    def highest_coroot(self) -> Vec:
        pos = [self.coroot_of[a] for a in self.positive_roots]
        best = max(pos, key=lambda c: (sum(self.coroot_coords[c]), self.coroot_coords[c]))
        for c in pos:
            if not all(x <= y for x, y in zip(self.coroot_coords[c], self.coroot_coords[best])):
                raise UnsupportedType("no unique maximal coroot")
        return best

    @property
    def alpha0(self) -> Vec:
        """The root whose coroot is the highest coroot."""
        h = self.highest_coroot
        for a in self.positive_roots:
            if self.coroot_of[a] == h:
                return a
        raise AssertionError("unreachable")

    def fundamental_weights(self) -> List[Tuple[Fraction, ...]]:
        """omega_i in X (x) Q with <omega_i, alpha_j^vee> = delta_ij."""
        n = self.rank
        rows = [list(c) for c in self.simple_coroots]
        return [tuple(frac_solve(rows, [int(i == j) for j in range(n)])) for i in range(n)]

    def rho2(self) -> Vec:
        """Sum of the positive roots: dominant, regular and in X."""
        return tuple(sum(a[k] for a in self.positive_roots) for k in range(self.rank))

    def invariant_form(self) -> List[List[int]]:
        """Gram matrix of B(x, y) = sum over R+ of <x, a^vee><y, a^vee>."""
        n = self.rank
        g = [[0] * n for _ in range(n)]
        for a in self.positive_roots:
            c = self.coroot_of[a]
            for i in range(n):
                for j in range(n):
                    g[i][j] += c[i] * c[j]
        return g

    def root_index(self) -> int:
        """|X / ZR|, the order of the length-zero group."""
        from .linalg import frac_det
        return abs(int(frac_det([list(a) for a in self.simple_roots])))

    def descriptor(self) -> dict:
        return {"type": self.cartan_type, "rank": self.rank, "lattice": self.lattice_kind}

    def __repr__(self):
        return f"RootDatum({self.cartan_type}{self.rank}, {self.lattice_kind} lattice)"

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash((self.cartan_type, self.rank, self.lattice_kind))


def build_root_datum(cartan_type: str, rank: int, lattice_kind: str = "root") -> RootDatum:
    return RootDatum(cartan_type, rank, lattice_kind)


@dataclass(frozen=True)
class ParamAssignment:
    """Exponents lambda and lambda* keyed by simple-root label.

    Missing entries of ``lam_star`` default to ``lam``.
    """

    lam: Mapping[int, int]
    lam_star: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def equal(cls, d: RootDatum, value: int = 1) -> "ParamAssignment":
        return cls({i: value for i in range(1, d.rank + 1)})

    def value(self, i: int) -> int:
        return self.lam[i]

    def star_value(self, i: int) -> int:
        return self.lam_star.get(i, self.lam[i])

    def validate(self, d: RootDatum):
        labels = range(1, d.rank + 1)
        for i in labels:
            if i not in self.lam:
                raise InconsistentParameters(f"lambda missing for simple root {i}")
            if self.lam[i] < 0 or self.star_value(i) < 0:
                raise InconsistentParameters("lambda values must be nonnegative")
        for i in labels:
            for j in labels:
                if d.orbit_of[d.alpha(i)] == d.orbit_of[d.alpha(j)]:
                    if self.lam[i] != self.lam[j] or self.star_value(i) != self.star_value(j):
                        raise InconsistentParameters(
                            f"simple roots {i} and {j} are conjugate but carry different parameters")
        for i in labels:
            if not d.coroot_in_2Y(d.alpha(i)) and self.star_value(i) != self.lam[i]:
                raise InconsistentParameters(
                    f"lambda*({i}) must equal lambda({i}) since its coroot is not in 2Y")

    def as_dict(self) -> dict:
        return {"lambda": {str(k): v for k, v in sorted(self.lam.items())},
                "lambda_star": {str(k): self.star_value(k) for k in sorted(self.lam)}}


def _simple_label_in_orbit(d: RootDatum, a) -> int:
    for i in range(1, d.rank + 1):
        if d.orbit_of[d.alpha(i)] == d.orbit_of[tuple(a)]:
            return i
    raise AssertionError("every root is conjugate to a simple root")


def affine_parameters(d: RootDatum, p: Optional[ParamAssignment] = None) -> Dict[int, ParamSymbol]:
    """Parameter symbol of every generator of S_aff (label 0 is s0).

    Generators share a symbol exactly when they are conjugate in the
    extended affine Weyl group: s_i ~ s_j when alpha_i, alpha_j are
    W-conjugate, and s0 joins the class of alpha_0 unless alpha_0^vee lies
    in 2Y.
    """
    if p is not None:
        p.validate(d)
    cls_of: Dict[int, Tuple] = {}
    for i in range(1, d.rank + 1):
        cls_of[i] = ("orbit", d.orbit_of[d.alpha(i)])
    a0 = d.alpha0
    cls_of[0] = ("star",) if d.coroot_in_2Y(a0) else ("orbit", d.orbit_of[a0])
    ids: Dict[Tuple, int] = {}
    for lab in list(range(1, d.rank + 1)) + [0]:
        ids.setdefault(cls_of[lab], len(ids))
    return {lab: ParamSymbol(ids[c], f"q{ids[c]}") for lab, c in cls_of.items()}


def parameter_values(d: RootDatum, p: ParamAssignment, q) -> Dict[int, Fraction]:
    """Numerical q_s for each symbol id, given base ``q`` and exponents ``p``."""
    p.validate(d)
    sym = affine_parameters(d, p)
    out: Dict[int, Fraction] = {}
    for lab, s in sym.items():
        if lab == 0:
            j = _simple_label_in_orbit(d, d.alpha0)
            e = p.star_value(j)
        else:
            e = p.value(lab)
        val = Fraction(q) ** e
        if out.setdefault(s.id, val) != val:
            raise InconsistentParameters("conjugate generators received different values")
    return out


def symbolic_q(sym: ParamSymbol) -> LaurentPoly:
    return LaurentPoly.q(sym.id)


def load_datum(source) -> Tuple[RootDatum, ParamAssignment]:
    """Read a root datum description (JSON text, a mapping, or a path).

    Fields: cartan_type, rank, lattice_kind, and optional ``lambda`` and
    ``lambda_star`` objects keyed by simple-root label.
    """
    import json
    import os
    if isinstance(source, Mapping):
        doc = dict(source)
    elif isinstance(source, str) and os.path.exists(source):
        with open(source) as fh:
            doc = json.load(fh)
    else:
        doc = json.loads(source)
    try:
        d = build_root_datum(str(doc["cartan_type"]), int(doc["rank"]), str(doc.get("lattice_kind", "root")))
    except KeyError as exc:
        raise InconsistentParameters(f"root datum file lacks field {exc.args[0]!r}") from None
    lam = {int(k): int(v) for k, v in doc.get("lambda", {}).items()} or {i: 1 for i in range(1, d.rank + 1)}
    lam_star = {int(k): int(v) for k, v in doc.get("lambda_star", {}).items()}
    p = ParamAssignment(lam, lam_star)
    p.validate(d)
    return d, p
