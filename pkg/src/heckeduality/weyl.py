"""Finite Weyl groups as explicit sets of integer matrices acting on X.

Everything here is brute force over the whole group, which is fine for
rank at most 4 (|W| <= 1152).  Elements are compared by their matrices;
reduced words are recovered on demand by stripping left descents.

>>> from heckeduality.root_datum import build_root_datum
>>> W = WeylGroup(build_root_datum("A", 2))
>>> W.order, W.length(W.longest_element())
(6, 3)
>>> W.word(W.longest_element())
(1, 2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import flint

from . import linalg
from .errors import NotASubgroup, NotInNormalizer, NotSaturated
from .root_datum import RootDatum, Vec, pair

Mat = Tuple[Tuple[int, ...], ...]


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(a: Mat, x) -> tuple:
    return tuple(sum(r[k] * x[k] for k in range(len(x))) for r in a)


@dataclass(frozen=True)
class WeylElement:
    """An element of W, stored as its integer matrix on X."""

    mat: Mat

    def __call__(self, x) -> Vec:
        return _matvec(self.mat, x)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(_matmul(self.mat, other.mat))

    def __repr__(self):
        return f"WeylElement({self.mat})"


def subsets(labels: Iterable[int]) -> List[FrozenSet[int]]:
    """All subsets, ordered by size and then lexicographically."""
    labels = sorted(labels)
    return [frozenset(c) for k in range(len(labels) + 1) for c in combinations(labels, k)]


class WeylGroup:
    """The Weyl group of a root datum, with all elements enumerated."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        n = datum.rank
        self.rank = n
        self.labels = tuple(range(1, n + 1))
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.identity = WeylElement(ident)
        gens = {}
        for i in self.labels:
            a, c = datum.alpha(i), datum.alpha_vee(i)
            gens[i] = WeylElement(tuple(tuple(int(r == s) - a[r] * c[s] for s in range(n)) for r in range(n)))
        self.gens: Dict[int, WeylElement] = gens
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens.values():
                    x = w * s
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        pos = datum.positive_roots
        self._length = {w: sum(1 for a in pos if not datum.is_positive(w(a))) for w in seen}
        self._word: Dict[WeylElement, Tuple[int, ...]] = {}
        for w in seen:
            self._word[w] = self._descent_word(w)
        self.elements: Tuple[WeylElement, ...] = tuple(sorted(seen, key=self.key))
        self.index = {w: k for k, w in enumerate(self.elements)}
        self._inverse = {w: self._compute_inverse(w) for w in self.elements}

    # basic structure
    @property
    def order(self) -> int:
        return len(self.elements)

    def key(self, w: WeylElement):
        return (self._length[w], self._word[w])

    def length(self, w: WeylElement) -> int:
        return self._length[w]

    def word(self, w: WeylElement) -> Tuple[int, ...]:
        return self._word[w]

    def sign(self, w: WeylElement) -> int:
        return -1 if self._length[w] % 2 else 1

    def _descent_word(self, w: WeylElement) -> Tuple[int, ...]:
        word = []
        while self._length[w] > 0:
            for i in self.labels:
                sw = self.gens[i] * w
                if self._length[sw] < self._length[w]:
                    word.append(i)
                    w = sw
                    break
        return tuple(word)

    def _compute_inverse(self, w):
        out = self.identity
        for i in self._word[w]:
            out = self.gens[i] * out
        return out

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._inverse[w]

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return a * b

    def decompose(self, w: WeylElement):
        """(identity, reduced word); mirrors the affine Omega decomposition."""
        return self.identity, self._word[w]

    def finite_length(self, w: WeylElement) -> int:
        return self._length[w]

    def from_word(self, word: Sequence[int]) -> WeylElement:
        out = self.identity
        for i in word:
            out = out * self.gens[i]
        return out

    def length_and_word(self, w: WeylElement):
        return self._length[w], self._word[w]

    def act_root(self, w: WeylElement, a) -> Vec:
        return w(a)

    def is_reflection(self, w: WeylElement) -> bool:
        return self._length[w] % 2 == 1 and w * w == self.identity and self.reflection_root(w) is not None

    def reflection(self, a) -> WeylElement:
        """s_a as a group element."""
        d = self.datum
        c = d.coroot(a)
        n = self.rank
        return WeylElement(tuple(tuple(int(r == s) - a[r] * c[s] for s in range(n)) for r in range(n)))

    def reflection_root(self, w: WeylElement):
        for a in self.datum.positive_roots:
            if self.reflection(a) == w:
                return a
        return None

    def dual_mat(self, w: WeylElement) -> Mat:
        """Matrix of w on Y (the inverse transpose)."""
        m = self.inverse(w).mat
        n = self.rank
        return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))

    def act_dual(self, w: WeylElement, y) -> Vec:
        return _matvec(self.dual_mat(w), y)

    # parabolic machinery
    def parabolic(self, I) -> "Subgroup":
        I = frozenset(I)
        cache = self.__dict__.setdefault("_parabolic_cache", {})
        if I not in cache:
            cache[I] = Subgroup.generated(self, [self.gens[i] for i in sorted(I)])
        return cache[I]

    def longest_element(self, I=None) -> WeylElement:
        I = self.labels if I is None else I
        P = self.parabolic(I)
        return max(P.elements, key=self.key)

    def is_min_coset_rep(self, x: WeylElement, I) -> bool:
        return all(self._length[x * self.gens[i]] > self._length[x] for i in I)

    def minimal_coset_reps(self, I) -> List[WeylElement]:
        """One minimal length representative of each left coset x W_I."""
        return [x for x in self.elements if self.is_min_coset_rep(x, I)]

    def factor(self, w: WeylElement, I) -> Tuple[WeylElement, WeylElement]:
        """w = x u with x minimal in w W_I and u in W_I."""
        return factor_parabolic(self, w, I)

    def roots_in_span(self, I):
        return [a for a in self.datum.roots if self.datum.in_span(a, I)]

    def maps_into_span(self, w: WeylElement, I0, I) -> bool:
        """w(I0) inside the root subsystem spanned by I."""
        d = self.datum
        for j in I0:
            b = w(d.alpha(j))
            if not d.in_span(b, I):
                return False
        return True

    def c_set(self, I0, I) -> List[WeylElement]:
        """C_{I0}(I) = {w : w I0 contained in the span of I}."""
        I0, I = frozenset(I0), frozenset(I)
        if len(I) < len(I0):
            return []
        return [w for w in self.elements if self.maps_into_span(w, I0, I)]

    def stabilizer_s_I0(self, I0) -> "Subgroup":
        """S_{I0} = {w : w I0 = I0} (as a set of simple roots)."""
        d = self.datum
        target = {d.alpha(j) for j in I0}
        elts = [w for w in self.elements if {w(a) for a in target} == target]
        return Subgroup(self, elts)

    def normalizes(self, w: WeylElement, I0) -> bool:
        """w W_{I0} w^-1 = W_{I0}, i.e. w permutes the roots spanned by I0."""
        d = self.datum
        sub = {a for a in d.roots if d.in_span(a, I0)}
        return {w(a) for a in sub} == sub

    def perp_basis(self, I0) -> linalg.Matrix:
        """Columns: a rational basis of I0^perp inside X (x) Q."""
        n = self.rank
        I0 = sorted(I0)
        if not I0:
            return linalg.identity(n)
        rows = [list(self.datum.alpha_vee(j)) for j in I0]
        return linalg.nullspace(linalg.matrix(rows))

    def restrict_to_perp(self, w: WeylElement, I0) -> linalg.Matrix:
        basis = self.perp_basis(I0)
        img = linalg.matrix(w.mat) * basis
        try:
            return linalg.solve_right(basis, img)
        except ValueError:
            raise NotInNormalizer("w does not stabilize the orthogonal complement of I0") from None

    def det_on_perp(self, w: WeylElement, I0) -> int:
        if not self.normalizes(w, I0):
            raise NotInNormalizer("w does not normalize W_I0")
        m = self.restrict_to_perp(w, I0)
        if m.nrows() == 0:
            return 1
        return int(linalg.to_fraction(m.det()))

    def double_coset_reps(self, I, H: "Subgroup", C: Sequence[WeylElement],
                          prefer: Optional[Callable[[WeylElement], bool]] = None) -> List[WeylElement]:
        """One representative for each double coset W_I w H inside C.

        Representatives satisfying ``prefer`` win; ties are broken by
        length and then by reduced word.
        """
        WI = self.parabolic(I).elements
        Cset = set(C)
        seen = set()
        reps = []
        for c in sorted(Cset, key=self.key):
            if c in seen:
                continue
            orbit = {u * c * h for u in WI for h in H.elements}
            if not orbit <= Cset:
                raise NotSaturated("C is not a union of (W_I, H) double cosets")
            seen |= orbit
            reps.append(min(orbit, key=lambda w: (not prefer(w) if prefer else False, self.key(w))))
        return sorted(reps, key=self.key)

    def conjugate_parabolic(self, w: WeylElement, I) -> "Subgroup":
        """W_I^w = w^-1 W_I w."""
        wi = self.inverse(w)
        return Subgroup(self, [wi * u * w for u in self.parabolic(I).elements])

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, self.elements)

    def __repr__(self):
        return f"WeylGroup({self.datum!r}, order={self.order})"


def factor_parabolic(system, w, J):
    """Split ``w = x u`` with u in the subgroup generated by ``J`` and x minimal.

    Works for any system exposing ``mul``, ``length``, ``identity`` and a
    ``gens`` mapping.
    """
    u_word = []
    x = w
    changed = True
    while changed:
        changed = False
        for s in sorted(J):
            xs = system.mul(x, system.gens[s])
            if system.length(xs) < system.length(x):
                x = xs
                u_word.append(s)
                changed = True
                break
    u = system.identity
    for s in reversed(u_word):
        u = system.mul(u, system.gens[s])
    return x, u


class Subgroup:
    """An explicit subgroup of a Weyl group, with its conjugacy classes."""

    def __init__(self, group: WeylGroup, elements: Iterable[WeylElement]):
        self.group = group
        self.elements: Tuple[WeylElement, ...] = tuple(sorted(set(elements), key=group.key))
        self.element_set = frozenset(self.elements)
        ident = group.identity
        if ident not in self.element_set:
            raise NotASubgroup("subgroup must contain the identity")

    @classmethod
    def generated(cls, group: WeylGroup, gens: Sequence[WeylElement]) -> "Subgroup":
        elts = {group.identity}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    x = w * g
                    if x not in elts:
                        elts.add(x)
                        nxt.append(x)
            frontier = nxt
        return cls(group, elts)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, w):
        return w in self.element_set

    def __len__(self):
        return len(self.elements)

    def is_closed(self) -> bool:
        return all(a * b in self.element_set for a in self.elements for b in self.elements)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.element_set <= other.element_set

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, self.element_set & other.element_set)

    @cached_property
    def classes(self) -> List[Tuple[WeylElement, ...]]:
        """Conjugacy classes, each sorted, ordered by representative."""
        inv = self.group.inverse
        seen = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            cl = {x * g * inv(x) for x in self.elements}
            seen |= cl
            out.append(tuple(sorted(cl, key=self.group.key)))
        return out

    @cached_property
    def class_index(self) -> Dict[WeylElement, int]:
        return {g: k for k, cl in enumerate(self.classes) for g in cl}

    @property
    def class_reps(self) -> List[WeylElement]:
        return [cl[0] for cl in self.classes]

    def subgroups(self) -> List["Subgroup"]:
        """All subgroups (brute force over generating pairs; small groups only)."""
        found = {}
        elts = self.elements
        cands = [Subgroup.generated(self.group, [])]
        for a in elts:
            cands.append(Subgroup.generated(self.group, [a]))
        for a, b in combinations(elts, 2):
            cands.append(Subgroup.generated(self.group, [a, b]))
        for c in cands:
            found.setdefault(c.element_set, c)
        # close under joins until stable (covers non-2-generated subgroups)
        changed = True
        while changed:
            changed = False
            cur = list(found.values())
            for x, y in combinations(cur, 2):
                j = Subgroup.generated(self.group, list(x.elements) + list(y.elements))
                if j.element_set not in found:
                    found[j.element_set] = j
                    changed = True
        return sorted(found.values(), key=lambda s: (s.order, [self.group.key(w) for w in s.elements]))

    def __repr__(self):
        return f"Subgroup(order={self.order})"


class ClassFunction:
    """A rational valued class function on an explicit subgroup."""

    def __init__(self, group: Subgroup, values: Sequence):
        self.group = group
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != len(group.classes):
            raise ValueError("one value per conjugacy class expected")
        self.values = vals

    @classmethod
    def from_function(cls, group: Subgroup, f: Callable[[WeylElement], object]) -> "ClassFunction":
        out = cls(group, [f(cl[0]) for cl in group.classes])
        for cl in group.classes:
            for g in cl:
                if Fraction(f(g)) != out(g):
                    raise ValueError("function is not constant on conjugacy classes")
        return out

    @classmethod
    def trivial(cls, group: Subgroup) -> "ClassFunction":
        return cls(group, [1] * len(group.classes))

    @classmethod
    def zero(cls, group: Subgroup) -> "ClassFunction":
        return cls(group, [0] * len(group.classes))

    @classmethod
    def sign(cls, group: Subgroup) -> "ClassFunction":
        W = group.group
        return cls(group, [W.sign(cl[0]) for cl in group.classes])

    def __call__(self, g: WeylElement) -> Fraction:
        return self.values[self.group.class_index[g]]

    def _check(self, other):
        if self.group.element_set != other.group.element_set:
            raise ValueError("class functions live on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * Fraction(other) for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.group.element_set == other.group.element_set
                and self.values == other.values)

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"

    def inner(self, other: "ClassFunction") -> Fraction:
        self._check(other)
        inv = self.group.group.inverse
        tot = sum((self(g) * other(inv(g)) for g in self.group.elements), Fraction(0))
        return tot / self.group.order

    def restrict(self, K: Subgroup) -> "ClassFunction":
        if not K.is_subgroup_of(self.group):
            raise NotASubgroup("restriction target is not a subgroup")
        return ClassFunction(K, [self(cl[0]) for cl in K.classes])

    def induce(self, G: Subgroup) -> "ClassFunction":
        return induce_class_function(self, G)


def induce_class_function(phi: ClassFunction, G: Subgroup) -> ClassFunction:
    """(Ind phi)(g) = |K|^-1 * sum over x in G with x g x^-1 in K of phi(x g x^-1)."""
    K = phi.group
    if not K.is_subgroup_of(G):
        raise NotASubgroup("K is not contained in G")
    inv = G.group.inverse
    vals = []
    for g in G.class_reps:
        tot = Fraction(0)
        for x in G.elements:
            y = x * g * inv(x)
            if y in K.element_set:
                tot += phi(y)
        vals.append(tot / K.order)
    return ClassFunction(G, vals)


def irreducible_characters(H: Subgroup) -> List[ClassFunction]:
    """Irreducible complex characters of H by the Burnside algorithm.

    Only groups whose characters are rational valued are handled (all
    Weyl groups and the small subgroups used here); otherwise ValueError.
    """
    classes = H.classes
    k = len(classes)
    idx = H.class_index
    inv = H.group.inverse
    reps = [cl[0] for cl in classes]
    # class multiplication constants a[i][j][l] = #{x in C_i : x^-1 g_l in C_j}
    mats = []
    for i in range(k):
        m = [[0] * k for _ in range(k)]
        for l, g in enumerate(reps):
            for x in classes[i]:
                m[idx[inv(x) * g]][l] += 1
        mats.append(linalg.matrix(m))
    spaces = [linalg.identity(k)]
    for i in range(k):
        new = []
        for V in spaces:
            if V.ncols() == 1:
                new.append(V)
                continue
            A = linalg.solve_right(V, mats[i] * V)
            for lam in _rational_eigenvalues(A):
                N = linalg.nullspace(A - linalg.scalar(linalg.to_fraction(lam), A.nrows()))
                new.append(V * N)
        spaces = new
    if any(V.ncols() != 1 for V in spaces) or len(spaces) != k:
        raise ValueError("class algebra did not split over Q")
    inv_class = [idx[inv(r)] for r in reps]
    sizes = [len(cl) for cl in classes]
    e_class = idx[H.group.identity]
    chars = []
    for V in spaces:
        omega = [linalg.to_fraction(V[l, 0]) for l in range(k)]
        omega = [w / omega[e_class] for w in omega]
        s = sum(omega[l] * omega[inv_class[l]] / sizes[l] for l in range(k))
        deg2 = Fraction(H.order) / s
        deg = _frac_isqrt(deg2)
        chars.append(ClassFunction(H, [deg * omega[l] / sizes[l] for l in range(k)]))
    chars.sort(key=lambda c: (c.values[e_class], [-v for v in c.values]))
    return chars


def _frac_isqrt(x: Fraction) -> Fraction:
    from .coefficients import exact_sqrt
    return exact_sqrt(x)


def _rational_eigenvalues(A: linalg.Matrix):
    poly = A.charpoly()
    _, factors = poly.factor()
    out = []
    for f, _mult in factors:
        if f.degree() != 1:
            raise ValueError("class algebra has irrational eigenvalues")
        c = f.coeffs()
        out.append(-c[0] / c[1])
    return out
