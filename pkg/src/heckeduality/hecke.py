"""Iwahori-Hecke algebras and the Bernstein-Lusztig presentation.

``HeckeAlgebra`` works over any Coxeter-like system that provides
``identity``, ``gens``, ``mul``, ``inverse``, ``length``, ``finite_length``
and ``decompose(w) -> (gamma, word)`` with ``l(gamma) = 0``.  The finite
Weyl group, the extended affine Weyl group and the reflection groups
R(Lambda) used by the relative duality all fit this shape.

Elements are stored in the Iwahori-Matsumoto basis {T_w}.  The
multiplication rule is

    T_x T_s = T_xs                         if l(xs) > l(x)
    T_x T_s = q_s T_xs + (q_s - 1) T_x     otherwise

and T_x T_gamma = T_(x gamma) for gamma of length zero.

``AffineHeckeAlgebra`` adds the commuting elements theta_x and the
Bernstein-Lusztig basis {T_w theta_x : w in W, x in X}, stored as
``BLElement``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .coefficients import LaurentPoly, ParamSymbol
from .errors import NonPolynomialQuotient, ParameterMismatch
from .root_datum import Vec, pair

ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)


def _add_into(acc: dict, key, c: LaurentPoly):
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


class HeckeElement:
    """A finite combination of T_w with Laurent polynomial coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: Mapping | None = None):
        self.algebra = algebra
        self.terms: Dict = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def _same(self, other: "HeckeElement"):
        if not self.algebra.compatible(other.algebra):
            raise ParameterMismatch("elements of Hecke algebras with different parameters")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = self.algebra.one() * LaurentPoly.coerce(other)
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return HeckeElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._same(other)
            return self.algebra.mul(self, other)
        c = LaurentPoly.coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return HeckeElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = LaurentPoly.coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return HeckeElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.compatible(other.algebra) and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, w) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms, key=self.algebra.system.key)

    def __repr__(self):
        if not self.terms:
            return "0"
        sysm = self.algebra.system
        parts = []
        for w in self.support():
            g, word = sysm.decompose(w)
            lab = "T_" + ("".join(map(str, word)) or "e")
            if hasattr(sysm, "omega") and g != sysm.identity:
                lab = f"T_g{sysm.omega.index(g)}" + (f"*T_{''.join(map(str, word))}" if word else "")
            parts.append(f"({self.terms[w]})*{lab}")
        return " + ".join(parts)


class HeckeAlgebra:
    """Iwahori-Hecke algebra of a Coxeter-like system with symbolic parameters."""

    def __init__(self, system, symbols: Mapping[object, ParamSymbol]):
        self.system = system
        self.symbols = dict(symbols)
        self._qs = {s: LaurentPoly.q(sym.id) for s, sym in self.symbols.items()}
        self._vs = {s: LaurentPoly.v(sym.id) for s, sym in self.symbols.items()}
        self._inv_cache: Dict = {}

    @classmethod
    def finite(cls, W, symbols: Optional[Mapping[int, ParamSymbol]] = None) -> "HeckeAlgebra":
        """Finite Hecke algebra of a Weyl group; symbols default to root orbits."""
        if symbols is None:
            from .root_datum import affine_parameters
            symbols = affine_parameters(W.datum)
        return cls(W, {i: symbols[i] for i in W.labels})

    def compatible(self, other: "HeckeAlgebra") -> bool:
        return self is other or (self.system is other.system and self.symbols == other.symbols)

    # basis
    def q(self, s) -> LaurentPoly:
        return self._qs[s]

    def vq(self, s) -> LaurentPoly:
        """q_s^(1/2)."""
        return self._vs[s]

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def one(self) -> HeckeElement:
        return self.T(self.system.identity)

    def T(self, w, c=ONE) -> HeckeElement:
        return HeckeElement(self, {w: LaurentPoly.coerce(c)})

    def T_gen(self, s) -> HeckeElement:
        return self.T(self.system.gens[s])

    def T_word(self, word) -> HeckeElement:
        out = self.one()
        for s in word:
            out = out * self.T_gen(s)
        return out

    def q_of(self, w) -> LaurentPoly:
        out = ONE
        for s in self.system.decompose(w)[1]:
            out = out * self._qs[s]
        return out

    def sqrt_q_of(self, w) -> LaurentPoly:
        out = ONE
        for s in self.system.decompose(w)[1]:
            out = out * self._vs[s]
        return out

    # multiplication
    def _right_gen(self, terms: Dict, s) -> Dict:
        sysm = self.system
        g = sysm.gens[s]
        qs = self._qs[s]
        out: Dict = {}
        for x, c in terms.items():
            xs = sysm.mul(x, g)
            if sysm.length(xs) > sysm.length(x):
                _add_into(out, xs, c)
            else:
                _add_into(out, xs, c * qs)
                _add_into(out, x, c * (qs - 1))
        return out

    def _right_basis(self, terms: Dict, b) -> Dict:
        sysm = self.system
        gamma, word = sysm.decompose(b)
        if gamma != sysm.identity:
            terms = {sysm.mul(x, gamma): c for x, c in terms.items()}
        for s in word:
            terms = self._right_gen(terms, s)
        return terms

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        out: Dict = {}
        for y, cy in b.terms.items():
            part = self._right_basis(dict(a.terms), y)
            for k, c in part.items():
                _add_into(out, k, c * cy)
        return HeckeElement(self, out)

    def gen_inverse(self, s) -> HeckeElement:
        """T_s^-1 = q_s^-1 T_s - (1 - q_s^-1)."""
        qi = self._qs[s].invert()
        return self.T_gen(s) * qi - self.one() * (ONE - qi)

    def t_inverse(self, w) -> HeckeElement:
        got = self._inv_cache.get(w)
        if got is not None:
            return got
        sysm = self.system
        gamma, word = sysm.decompose(w)
        out = self.one()
        for s in reversed(word):
            out = out * self.gen_inverse(s)
        if gamma != sysm.identity:
            out = out * self.T(sysm.inverse(gamma))
        self._inv_cache[w] = out
        return out

    def inverse_of(self, h: HeckeElement) -> HeckeElement:
        """Inverse of a scalar multiple of a basis element."""
        if len(h.terms) != 1:
            raise ValueError("only monomial elements are inverted here")
        (w, c), = h.terms.items()
        return self.t_inverse(w) * c.invert()

    # involutions
    def star(self, h: HeckeElement) -> HeckeElement:
        """T_w -> (-1)^l(w_fin) q(w) T_(w^-1)^-1, extended linearly."""
        sysm = self.system
        out = self.zero()
        for w, c in h.terms.items():
            sign = -1 if sysm.finite_length(w) % 2 else 1
            out = out + self.t_inverse(sysm.inverse(w)) * (c * self.q_of(w) * sign)
        return out

    def star_generator(self, s) -> HeckeElement:
        """-q_s T_s^-1 = (q_s - 1) - T_s."""
        return self.one() * (self._qs[s] - 1) - self.T_gen(s)

    def kappa(self, h: HeckeElement) -> HeckeElement:
        """T_w -> T_(w^-1); coefficients are real so they are kept."""
        inv = self.system.inverse
        return HeckeElement(self, {inv(w): c for w, c in h.terms.items()})

    def __repr__(self):
        return f"HeckeAlgebra({self.system!r})"


@dataclass(frozen=True)
class BLKey:
    """Basis element T_w theta_x of the Bernstein-Lusztig basis."""

    w: object
    x: Vec


class BLElement:
    """A combination of T_w theta_x (w in W finite, x in X)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "AffineHeckeAlgebra", terms: Mapping | None = None):
        self.algebra = algebra
        self.terms: Dict[Tuple, LaurentPoly] = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return BLElement(self.algebra, out)

    def __neg__(self):
        return BLElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BLElement):
            return self.algebra.bl_mul(self, other)
        c = LaurentPoly.coerce(other)
        return BLElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BLElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        W = self.algebra.W
        parts = []
        for (w, x), c in sorted(self.terms.items(), key=lambda kv: (W.key(kv[0][0]), kv[0][1])):
            lab = "T_" + ("".join(map(str, W.word(w))) or "e")
            parts.append(f"({c})*{lab}*theta{x}")
        return " + ".join(parts) or "0"


class AffineHeckeAlgebra(HeckeAlgebra):
    """Extended affine Hecke algebra of a root datum, symbolic parameters."""

    def __init__(self, G):
        super().__init__(G, G.symbols)
        self.G = G
        self.W = G.W
        self.datum = G.datum
        self._fin = HeckeAlgebra(G.W, {i: G.symbols[i] for i in G.W.labels})
        self._commute_cache: Dict = {}
        self._push_cache: Dict = {}
        self._bl_cache: Dict = {}
        self._theta_cache: Dict = {}

    # finite part
    @property
    def finite_algebra(self) -> HeckeAlgebra:
        return self._fin

    def _fin_mul(self, u, v) -> Dict:
        """T_u T_v in the finite Hecke algebra, as a dict."""
        return self._fin._right_basis({u: ONE}, v)

    # theta in the Iwahori-Matsumoto basis
    def theta_dominant(self, x) -> HeckeElement:
        t = self.G.translation(x)
        return self.T(t, self.sqrt_q_of(t).invert())

    def theta_inv_dominant(self, x) -> HeckeElement:
        t = self.G.translation(x)
        return self.t_inverse(t) * self.sqrt_q_of(t)

    def theta(self, x, shift: Optional[Vec] = None) -> HeckeElement:
        """theta_x = theta_(x + lam) theta_lam^-1 with lam dominant."""
        x = tuple(x)
        if shift is None:
            got = self._theta_cache.get(x)
            if got is not None:
                return got
        lam = self.G.dominant_shift(x) if shift is None else tuple(shift)
        x1 = tuple(a + b for a, b in zip(x, lam))
        if not (self.datum.is_dominant(lam) and self.datum.is_dominant(x1)):
            raise ValueError("shift must make both pieces dominant")
        out = self.theta_dominant(x1) * self.theta_inv_dominant(lam)
        if shift is None:
            self._theta_cache[x] = out
        return out

    def tbar(self, x, mu: Optional[Vec] = None) -> HeckeElement:
        """Tbar_x = T_(t_(x+mu)) T_(t_mu)^-1 with mu and x + mu dominant."""
        x = tuple(x)
        mu = self.G.dominant_shift(x) if mu is None else tuple(mu)
        x1 = tuple(a + b for a, b in zip(x, mu))
        if not (self.datum.is_dominant(mu) and self.datum.is_dominant(x1)):
            raise ValueError("mu must make both pieces dominant")
        return self.T(self.G.translation(x1)) * self.t_inverse(self.G.translation(mu))

    def tbar_element(self, w) -> HeckeElement:
        """Tbar_w = T_(w_fin) Tbar_x for w = w_fin t_x."""
        return self.T(self.G.finite(w.fin)) * self.tbar(w.trans)

    def tbar_theta_ratio(self, x) -> LaurentPoly:
        """The monomial m with Tbar_x = m theta_x, found by comparing both sides."""
        tb, th = self.tbar(x), self.theta(x)
        k = next(iter(th.terms))
        m = tb.terms[k] / th.terms[k]
        if th * m != tb:
            raise AssertionError("Tbar_x is not a monomial multiple of theta_x")
        return m

    # Bernstein-Lusztig basis
    def bl(self, w=None, x=None, c=ONE) -> BLElement:
        w = self.W.identity if w is None else w
        x = self.G.zero if x is None else tuple(x)
        return BLElement(self, {(w, x): LaurentPoly.coerce(c)})

    def bl_theta(self, x) -> BLElement:
        return self.bl(None, x)

    def bl_T(self, w) -> BLElement:
        return self.bl(w, None)

    def _star_v(self, i: int) -> LaurentPoly:
        """q^(lambda*(alpha_i)/2), carried by s0 when alpha_i^vee is in 2Y."""
        d = self.datum
        a = d.alpha(i)
        if not d.coroot_in_2Y(a):
            return self._vs[i]
        if d.orbit_of[a] != d.orbit_of[d.alpha0]:
            raise AssertionError("coroot in 2Y but alpha_i not conjugate to alpha_0")
        return self._vs[0]

    def commute_correction(self, x, i: int) -> Dict[Vec, LaurentPoly]:
        """theta_x T_s - T_s theta_(s x) as a combination of theta's.

        The correction is ((q_s - 1) + theta_(-a)(A - B)) times the divided
        difference (theta_x - theta_(sx)) / (1 - theta_(-2a)), with
        A = q^((lambda+lambda*)/2) and B = q^((lambda-lambda*)/2).
        """
        key = (tuple(x), i)
        got = self._commute_cache.get(key)
        if got is not None:
            return got
        d = self.datum
        a = d.alpha(i)
        n = pair(x, d.alpha_vee(i))
        qs = self._qs[i]
        vs, vstar = self._vs[i], self._star_v(i)
        A, B = vs * vstar, vs * vstar.invert()
        # polynomials in z = theta_(-a), as {exponent: coefficient}
        P = {0: qs - 1}
        if not (A - B).is_zero():
            P[1] = A - B
        numer = {}
        for e, c in P.items():
            _add_into(numer, e, c)
            _add_into(numer, e + n, -c)
        quot = _divide_by_one_minus_z2(numer)
        out = {}
        for k, c in quot.items():
            z = tuple(xi - k * ai for xi, ai in zip(x, a))
            _add_into(out, z, c)
        self._commute_cache[key] = out
        return out

    def _push(self, x: Vec, v) -> Dict[Tuple, LaurentPoly]:
        """theta_x T_v = sum c T_w theta_z for finite v."""
        key = (x, v)
        got = self._push_cache.get(key)
        if got is not None:
            return got
        W = self.W
        if v == W.identity:
            out = {(W.identity, x): ONE}
        else:
            word = W.word(v)
            s, rest = word[0], W.from_word(word[1:])
            sx = W.gens[s](x)
            out = {}
            # T_s theta_(sx) T_rest
            for (w, z), c in self._push(sx, rest).items():
                for u, cu in self._fin_mul(W.gens[s], w).items():
                    _add_into(out, (u, z), c * cu)
            for z, c in self.commute_correction(x, s).items():
                for k2, c2 in self._push(z, rest).items():
                    _add_into(out, k2, c * c2)
        self._push_cache[key] = out
        return out

    def bl_mul(self, a: BLElement, b: BLElement) -> BLElement:
        out: Dict = {}
        for (u, x), cu in a.terms.items():
            for (v, y), cv in b.terms.items():
                for (w, z), c in self._push(x, v).items():
                    zy = tuple(p + q for p, q in zip(z, y))
                    for w2, c2 in self._fin_mul(u, w).items():
                        _add_into(out, (w2, zy), cu * cv * c * c2)
        return BLElement(self, out)

    def bl_of_generator(self, s) -> BLElement:
        """T_s in the BL basis; for s0 use T_(s0) = q(t_a0)^(1/2) theta_a0 T_(s_a0)^-1."""
        G = self.G
        if s != 0:
            return self.bl_T(self.W.gens[s])
        a0 = G.alpha0
        s_a0 = self.W.reflection(a0)
        inv = self._fin.t_inverse(s_a0)
        coef = G.sqrt_q_of(G.translation(a0))
        right = BLElement(self, {(w, G.zero): c for w, c in inv.terms.items()})
        return self.bl_theta(a0) * right * coef

    def bl_of_nearly_dominant(self, w) -> BLElement:
        """T_w = (q(t_(x+lam)) / q(t_lam))^(1/2) T_(w_fin) theta_x for nearly dominant w."""
        G = self.G
        lam = G.dominant_shift(w.trans)
        x1 = tuple(a + b for a, b in zip(w.trans, lam))
        coef = G.sqrt_q_of(G.translation(x1)) * G.sqrt_q_of(G.translation(lam)).invert()
        return self.bl(w.fin, w.trans, coef)

    def bl_of_basis(self, w) -> BLElement:
        got = self._bl_cache.get(w)
        if got is not None:
            return got
        G = self.G
        gamma, word = G.decompose(w)
        if not word:
            out = self.bl_of_nearly_dominant(gamma)
        else:
            prefix = G.mul(w, G.inverse(G.gens[word[-1]]))
            out = self.bl_of_basis(prefix) * self.bl_of_generator(word[-1])
        self._bl_cache[w] = out
        return out

    def bl_normal_form(self, h: HeckeElement) -> BLElement:
        out = BLElement(self, {})
        for w, c in h.terms.items():
            out = out + self.bl_of_basis(w) * c
        return out

    def from_bl(self, b: BLElement) -> HeckeElement:
        out = self.zero()
        G = self.G
        for (w, x), c in b.terms.items():
            out = out + self.T(G.finite(w)) * self.theta(x) * c
        return out

    def __repr__(self):
        return f"AffineHeckeAlgebra({self.datum!r})"


def _divide_by_one_minus_z2(numer: Dict[int, LaurentPoly]) -> Dict[int, LaurentPoly]:
    """Exact quotient numer / (1 - z^2) of Laurent polynomials in z."""
    if not numer:
        return {}
    lo, hi = min(numer), max(numer)
    quot: Dict[int, LaurentPoly] = {}
    for k in range(lo, hi - 1):
        c = numer.get(k, ZERO) + quot.get(k - 2, ZERO)
        if not c.is_zero():
            quot[k] = c
    # verify (1 - z^2) * quot == numer
    back: Dict[int, LaurentPoly] = {}
    for k, c in quot.items():
        _add_into(back, k, c)
        _add_into(back, k + 2, -c)
    if back != {k: c for k, c in numer.items() if not c.is_zero()}:
        raise NonPolynomialQuotient("divided difference left a remainder")
    return quot
