"""Laurent polynomials in the square roots of the Hecke parameters.

Every parameter class carries a variable ``v`` with ``v**2 = q``.  Half
powers of ``q`` are then ordinary integer powers of ``v``, so q(w)^(1/2)
and q^((lambda +- lambda*)/2) never leave the ring.

>>> q = LaurentPoly.q(0)
>>> (q - 1) * (q + 1)
LaurentPoly(q0^2 - 1)
>>> specialize(q * q - 1, {0: 4})
Fraction(15, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import IllegalParameter, NonInvertibleCoefficient

Monomial = Tuple[Tuple[int, int], ...]  # sorted ((var, exponent over v), ...)
Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class ParamSymbol:
    """A parameter class; ``id`` doubles as the variable index."""

    id: int
    name: str = ""

    def __str__(self):
        return self.name or f"q{self.id}"


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for var, e in b:
        e2 = d.get(var, 0) + e
        if e2:
            d[var] = e2
        else:
            del d[var]
    return tuple(sorted(d.items()))


class LaurentPoly:
    """Immutable multivariate Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    key = tuple(sorted((v, e) for v, e in mono if e))
                    clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
            clean = {k: c for k, c in clean.items() if c}
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "LaurentPoly":
        # terms already canonical apart from ordering
        obj = cls.__new__(cls)
        obj._terms = dict(sorted((k, c) for k, c in terms.items() if c))
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls._raw({(): Fraction(c)})

    @classmethod
    def v(cls, var: int, power: int = 1) -> "LaurentPoly":
        return cls._raw({((var, power),) if power else (): Fraction(1)})

    @classmethod
    def q(cls, var: int, power: int = 1) -> "LaurentPoly":
        return cls.v(var, 2 * power)

    @classmethod
    def monomial(cls, exps: Mapping[int, int], c: Scalar = 1) -> "LaurentPoly":
        """Monomial ``c * prod v_i**exps[i]``."""
        return cls({tuple(sorted(exps.items())): c})

    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        return NotImplemented

    # inspection
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction | None:
        """The rational value if the polynomial is constant, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        return None

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    # arithmetic
    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * other for k, c in self._terms.items()})
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _mono_mul(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def invert(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise NonInvertibleCoefficient(f"cannot invert {self}")
        (mono, c), = self._terms.items()
        return LaurentPoly._raw({tuple((v, -e) for v, e in mono): 1 / c})

    def __truediv__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt_monomial(self) -> "LaurentPoly":
        """Square root of a monomial with even exponents and coefficient 1."""
        if not self.is_monomial():
            raise NonInvertibleCoefficient(f"{self} is not a monomial")
        (mono, c), = self._terms.items()
        if c != 1 or any(e % 2 for _, e in mono):
            raise NonInvertibleCoefficient(f"{self} has no monomial square root")
        return LaurentPoly._raw({tuple((v, e // 2) for v, e in mono): Fraction(1)})

    def substitute(self, images: Mapping[int, "LaurentPoly"]) -> "LaurentPoly":
        """Replace ``v_i`` by the monomial ``images[i]`` (others kept)."""
        out = LaurentPoly._raw({})
        for mono, c in self._terms.items():
            t = LaurentPoly.const(c)
            for var, e in mono:
                t = t * (images[var] ** e if var in images else LaurentPoly.v(var, e))
            out = out + t
        return out

    # comparison and display
    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        # highest total degree first reads more naturally
        for mono, c in sorted(self._terms.items(), key=lambda kc: (-sum(e for _, e in kc[0]), kc[0])):
            factors = []
            for var, e in mono:
                if e % 2 == 0:
                    base, p = f"q{var}", e // 2
                else:
                    base, p = f"v{var}", e
                factors.append(base if p == 1 else f"{base}^{p}")
            body = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if body and a == 1:
                txt = body
            elif body:
                txt = f"{a}*{body}"
            else:
                txt = str(a)
            parts.append((sign, txt))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, txt in parts[1:]:
            s += f" {sign} {txt}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self})"


def exact_sqrt(q: Scalar) -> Fraction:
    """Positive rational square root of ``q``; IllegalParameter if none."""
    q = Fraction(q)
    if q <= 0:
        raise IllegalParameter(f"parameter {q} must be positive")
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        raise IllegalParameter(f"parameter {q} is not the square of a rational")
    return Fraction(n, d)


def v_values(assign: Mapping) -> Dict[int, Fraction]:
    """Turn ``{symbol or id: q value}`` into ``{id: v value}``."""
    out = {}
    for key, q in assign.items():
        var = key.id if isinstance(key, ParamSymbol) else int(key)
        if Fraction(q) == 1:
            raise IllegalParameter("q = 1 is a root of unity")
        out[var] = exact_sqrt(q)
    return out


def specialize(p: LaurentPoly, assign: Mapping, *, v_given: bool = False) -> Fraction:
    """Evaluate ``p`` at the parameter values ``assign`` (q values by default).

    With ``v_given=True`` the mapping already holds the square roots.
    """
    if v_given:
        vals = {int(getattr(k, "id", k)): Fraction(x) for k, x in assign.items()}
        if any(x <= 0 or x == 1 for x in vals.values()):
            raise IllegalParameter("square roots must be positive and different from 1")
    else:
        vals = v_values(assign)
    total = Fraction(0)
    for mono, c in p._terms.items():
        t = c
        for var, e in mono:
            if var not in vals:
                raise IllegalParameter(f"no value for parameter {var}")
            t *= vals[var] ** e
        total += t
    return total


def product(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for x in items:
        out = out * x
    return out
