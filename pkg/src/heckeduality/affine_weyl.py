"""The extended affine Weyl group W(R) = W x| X.

An element ``w_fin * t_x`` acts on X (x) Q by ``v -> w_fin(v + x)``, so

    (w1 t_x1)(w2 t_x2) = (w1 w2) t_(w2^-1 x1 + x2).

The affine simple reflection is ``s0 = s_{alpha0} t_{-alpha0}``, where
alpha0^vee is the highest coroot.  Lengths come from the hyperplane
counting formula; reduced words come from greedy right stripping, which
also isolates the length zero part gamma in Omega.

Alcoves are handled through the right action ``p . (w t_x) = w^-1 p + x``
applied to the barycenter of the fundamental alcove
A^- = {-1 < <x, a^vee> < 0 for a > 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from typing import Dict, List, Mapping, Tuple

from .coefficients import LaurentPoly, ParamSymbol
from .root_datum import RootDatum, Vec, affine_parameters, pair
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class AffineWeylElement:
    """``fin * t_trans``."""

    fin: WeylElement
    trans: Vec

    def __repr__(self):
        return f"AffineWeylElement(fin={self.fin.mat}, t={self.trans})"


class AffineWeylGroup:
    """Extended affine Weyl group of a root datum."""

    def __init__(self, datum: RootDatum, W: WeylGroup | None = None):
        self.datum = datum
        self.W = W or WeylGroup(datum)
        n = datum.rank
        self.rank = n
        self.zero: Vec = (0,) * n
        self.identity = AffineWeylElement(self.W.identity, self.zero)
        self.alpha0 = datum.alpha0
        s_a0 = self.W.reflection(self.alpha0)
        gens = {0: AffineWeylElement(s_a0, tuple(-x for x in self.alpha0))}
        for i in self.W.labels:
            gens[i] = AffineWeylElement(self.W.gens[i], self.zero)
        self.gens: Dict[int, AffineWeylElement] = gens
        self.labels = tuple(sorted(gens))
        self.finite_labels = self.W.labels
        self.symbols: Dict[int, ParamSymbol] = affine_parameters(datum)
        self._len_cache: Dict[AffineWeylElement, int] = {}
        self._dec_cache: Dict[AffineWeylElement, Tuple[AffineWeylElement, Tuple[int, ...]]] = {}

    # group law
    def mul(self, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
        binv = self.W.inverse(b.fin)
        y = binv(a.trans)
        return AffineWeylElement(a.fin * b.fin, tuple(u + v for u, v in zip(y, b.trans)))

    def inverse(self, a: AffineWeylElement) -> AffineWeylElement:
        wx = a.fin(a.trans)
        return AffineWeylElement(self.W.inverse(a.fin), tuple(-u for u in wx))

    def translation(self, x) -> AffineWeylElement:
        return AffineWeylElement(self.W.identity, tuple(x))

    def finite(self, w: WeylElement) -> AffineWeylElement:
        return AffineWeylElement(w, self.zero)

    def from_word(self, word) -> AffineWeylElement:
        out = self.identity
        for s in word:
            out = self.mul(out, self.gens[s])
        return out

    def act(self, w: AffineWeylElement, v) -> tuple:
        """Left affine action v -> w_fin(v + x)."""
        return w.fin(tuple(a + b for a, b in zip(v, w.trans)))

    def act_right(self, p, w: AffineWeylElement) -> tuple:
        """Right action p . (w t_x) = w^-1 p + x."""
        y = self.W.inverse(w.fin)(p)
        return tuple(a + b for a, b in zip(y, w.trans))

    # length and decomposition
    def length(self, w: AffineWeylElement) -> int:
        got = self._len_cache.get(w)
        if got is not None:
            return got
        d = self.datum
        tot = 0
        for a in d.positive_roots:
            k = pair(w.trans, d.coroot_of[a])
            if d.is_positive(w.fin(a)):
                tot += abs(k)
            else:
                tot += abs(1 + k)
        self._len_cache[w] = tot
        return tot

    def omega_decompose(self, w: AffineWeylElement) -> Tuple[AffineWeylElement, Tuple[int, ...]]:
        """(gamma, word) with w = gamma * s_word[0] * ... and l(gamma) = 0."""
        got = self._dec_cache.get(w)
        if got is not None:
            return got
        stripped = []
        x = w
        lx = self.length(x)
        while lx > 0:
            for s in self.labels:
                y = self.mul(x, self.gens[s])
                ly = self.length(y)
                if ly < lx:
                    x, lx = y, ly
                    stripped.append(s)
                    break
            else:  # pragma: no cover - the length formula guarantees a descent
                raise AssertionError("no descent found")
        out = (x, tuple(reversed(stripped)))
        self._dec_cache[w] = out
        return out

    def decompose(self, w):
        return self.omega_decompose(w)

    def word(self, w: AffineWeylElement) -> Tuple[int, ...]:
        return self.omega_decompose(w)[1]

    def omega_part(self, w: AffineWeylElement) -> AffineWeylElement:
        return self.omega_decompose(w)[0]

    @cached_property
    def omega(self) -> List[AffineWeylElement]:
        """All length zero elements; |Omega| = |X / ZR|."""
        want = self.datum.root_index()
        found = []
        for r in range(1, 4):
            found = []
            for x in iproduct(range(-r, r + 1), repeat=self.rank):
                for u in self.W.elements:
                    g = AffineWeylElement(u, tuple(x))
                    if self.length(g) == 0:
                        found.append(g)
            if len(found) == want:
                break
        if len(found) != want:
            raise AssertionError("could not enumerate the length zero subgroup")
        return sorted(found, key=self.key)

    def key(self, w: AffineWeylElement):
        return (self.length(w), self.W.key(w.fin), w.trans)

    def ball(self, bound: int) -> List[AffineWeylElement]:
        """All w with l(w) <= bound, ordered by length."""
        seen = set(self.omega)
        layer = list(self.omega)
        out = list(layer)
        for k in range(bound):
            nxt = []
            for w in layer:
                for s in self.labels:
                    y = self.mul(w, self.gens[s])
                    if y not in seen and self.length(y) == k + 1:
                        seen.add(y)
                        nxt.append(y)
            layer = nxt
            out.extend(layer)
        return sorted(out, key=self.key)

    def finite_length(self, w: AffineWeylElement) -> int:
        return self.W.length(w.fin)

    def parity(self, w: AffineWeylElement) -> Tuple[int, int]:
        """((l(w_Omega) + l(w)) mod 2, l(w_fin) mod 2); the two always agree."""
        g = self.omega_part(w)
        return ((self.W.length(g.fin) + self.length(w)) % 2, self.W.length(w.fin) % 2)

    # parameters
    def q_of(self, w: AffineWeylElement, pm: Mapping[int, ParamSymbol] | None = None) -> LaurentPoly:
        pm = pm or self.symbols
        exps: Dict[int, int] = {}
        for s in self.word(w):
            v = pm[s].id
            exps[v] = exps.get(v, 0) + 2
        return LaurentPoly.monomial(exps)

    def sqrt_q_of(self, w: AffineWeylElement) -> LaurentPoly:
        """q(w)^(1/2) as a monomial in the v variables."""
        exps: Dict[int, int] = {}
        for s in self.word(w):
            v = self.symbols[s].id
            exps[v] = exps.get(v, 0) + 1
        return LaurentPoly.monomial(exps)

    # alcove geometry
    @cached_property
    def barycenter(self) -> Tuple[Fraction, ...]:
        """Barycenter of A^-: average of 0 and the vertices -omega_i / c_i."""
        d = self.datum
        hc = d.coroot_coords[d.highest_coroot]
        om = d.fundamental_weights()
        n = self.rank
        pts = [tuple(-x / hc[i] for x in om[i]) for i in range(n)]
        return tuple(sum(p[k] for p in pts) / (n + 1) for k in range(n))

    def alcove_point(self, w: AffineWeylElement) -> Tuple[Fraction, ...]:
        return self.act_right(self.barycenter, w)

    def wall(self, s: int) -> Tuple[Vec, int]:
        """The wall H_s of A^- as (root, level): H_{alpha_i, 0} or H_{alpha0, -1}."""
        if s == 0:
            return self.alpha0, -1
        return self.datum.alpha(s), 0

    def in_L_set(self, s: int, v) -> bool:
        """Whether s lies in L(A^- v): A^- v is on the positive side of (H_s) v."""
        if isinstance(v, WeylElement):
            v = self.finite(v)
        d = self.datum
        beta, n = self.wall(s)
        winv = self.W.inverse(v.fin)
        root = winv(beta)
        cor = d.coroot_of[root]
        level = n + pair(v.trans, cor)
        if not d.is_positive(root):
            cor = tuple(-c for c in cor)
            level = -level
        p = self.alcove_point(v)
        return sum(a * b for a, b in zip(p, cor)) > level

    def is_nearly_dominant(self, w: AffineWeylElement) -> bool:
        """<x, a^vee> >= 0 on R+ cap w^-1 R+ and >= -1 on R+ cap w^-1(-R+).

        For such w = w_fin t_x one has l(w t_lam) = l(w) + l(t_lam) for all
        dominant lam.
        """
        d = self.datum
        for a in d.positive_roots:
            k = pair(w.trans, d.coroot_of[a])
            if d.is_positive(w.fin(a)):
                if k < 0:
                    return False
            elif k < -1:
                return False
        return True

    def dominant_shift(self, x) -> Vec:
        """The dominant lam in X of least l(t_lam) with x + lam dominant."""
        d = self.datum
        need = [max(0, -pair(x, c)) for c in d.simple_coroots]
        om = self.fundamental_weights
        best = None
        for extra in iproduct(range(0, 5), repeat=self.rank):
            cs = [m + e for m, e in zip(need, extra)]
            lam = [sum(c * w[k] for c, w in zip(cs, om)) for k in range(self.rank)]
            if any(v.denominator != 1 for v in lam):
                continue
            lam = tuple(int(v) for v in lam)
            key = (self.length(self.translation(lam)), lam)
            if best is None or key < best:
                best = key
        return best[1]

    @cached_property
    def fundamental_weights(self):
        return self.datum.fundamental_weights()

    def __repr__(self):
        return f"AffineWeylGroup({self.datum!r})"
