"""Finite dimensional Hecke modules over Q with specialized parameters.

A module stores one rational matrix per generator: T_s for the simple
reflections it knows about, T_gamma for the length zero elements and
theta_(e_k) for a basis of X in the affine case.  Everything else (T_w,
theta_x, the action of a Bernstein-Lusztig expression) is assembled from
these.

Induction uses the Bernstein-Lusztig normal form: for a generator h and a
minimal coset representative x, the product h T_x is expanded over
T_w theta_mu, each w is split as x' u with u in the parabolic subgroup,
and T_u theta_mu is passed through the tensor product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .coefficients import LaurentPoly, specialize
from .errors import IllegalCharacter, NotAModule
from .hecke import AffineHeckeAlgebra, BLElement, HeckeAlgebra, HeckeElement
from .report import VerificationReport
from .root_datum import pair
from .weyl import factor_parabolic

Matrix = linalg.Matrix


def coxeter_order(system, s, t, limit: int = 12) -> Optional[int]:
    """Order of s t in the system, or None if it exceeds ``limit``."""
    st = system.mul(system.gens[s], system.gens[t])
    x = st
    for k in range(1, limit + 1):
        if x == system.identity:
            return k
        x = system.mul(x, st)
    return None


def min_coset_reps(system, J) -> list:
    J = sorted(J)
    return [x for x in system.elements
            if all(system.length(system.mul(x, system.gens[s])) > system.length(x) for s in J)]


class HeckeModule:
    """Matrices for the generators of a (parabolic sub)algebra.

    ``labels`` are the simple generators acting (a subset of the finite
    ones, plus 0 for s0 in the full affine case).  ``omega`` maps length
    zero elements to matrices and ``theta`` lists theta_(e_k).
    """

    def __init__(self, algebra: HeckeAlgebra, vvals: Mapping[int, Fraction], dim: int,
                 T: Mapping[int, Matrix], omega: Optional[Mapping] = None,
                 theta: Optional[Sequence[Matrix]] = None, labels: Optional[Iterable[int]] = None,
                 name: str = ""):
        self.algebra = algebra
        self.vvals = {int(k): Fraction(v) for k, v in vvals.items()}
        self.dim = dim
        self.T = dict(T)
        self.labels = tuple(sorted(self.T if labels is None else labels))
        self.omega = dict(omega or {})
        self.theta = list(theta) if theta is not None else None
        self.name = name
        self._tcache: Dict = {}
        self._thcache: Dict = {}
        self._spec_cache: Dict = {}
        self._theta_inv = [m.inv() for m in self.theta] if self.theta is not None else None

    # basics
    @property
    def is_affine(self) -> bool:
        return isinstance(self.algebra, AffineHeckeAlgebra)

    @property
    def system(self):
        return self.algebra.system

    @property
    def finite_system(self):
        return self.algebra.W if self.is_affine else self.algebra.system

    def spec(self, c: LaurentPoly) -> Fraction:
        got = self._spec_cache.get(c)
        if got is None:
            got = specialize(c, self.vvals, v_given=True)
            self._spec_cache[c] = got
        return got

    def qval(self, s) -> Fraction:
        return self.spec(self.algebra.q(s))

    def params(self) -> Dict[str, str]:
        return {f"q{k}": str(v * v) for k, v in sorted(self.vvals.items())}

    def identity(self) -> Matrix:
        return linalg.identity(self.dim)

    # matrices of basis elements
    def T_matrix(self, w) -> Matrix:
        """pi(T_w), assembled along a reduced word."""
        got = self._tcache.get(w)
        if got is not None:
            return got
        sysm = self.system
        gamma, word = sysm.decompose(w)
        if not word:
            if gamma == sysm.identity:
                out = self.identity()
            else:
                out = self.omega[gamma]
        else:
            last = word[-1]
            prefix = sysm.mul(w, sysm.inverse(sysm.gens[last]))
            out = self.T_matrix(prefix) * self.T[last]
        self._tcache[w] = out
        return out

    def T_finite(self, u) -> Matrix:
        """pi(T_u) for u in the finite Weyl group (affine modules)."""
        if not self.is_affine:
            return self.T_matrix(u)
        key = ("fin", u)
        got = self._tcache.get(key)
        if got is None:
            got = self.identity()
            for s in self.algebra.W.word(u):
                got = got * self.T[s]
            self._tcache[key] = got
        return got

    def theta_matrix(self, x) -> Matrix:
        x = tuple(x)
        got = self._thcache.get(x)
        if got is not None:
            return got
        out = self.identity()
        for k, e in enumerate(x):
            m = self.theta[k] if e > 0 else self._theta_inv[k]
            for _ in range(abs(e)):
                out = out * m
        self._thcache[x] = out
        return out

    def act(self, h: HeckeElement) -> Matrix:
        out = linalg.zeros(self.dim, self.dim)
        for w, c in h.terms.items():
            out += self.T_matrix(w) * linalg.to_fmpq(self.spec(c))
        return out

    def act_bl(self, b: BLElement) -> Matrix:
        out = linalg.zeros(self.dim, self.dim)
        for (u, x), c in b.terms.items():
            out += self.T_finite(u) * self.theta_matrix(x) * linalg.to_fmpq(self.spec(c))
        return out

    def trace(self, w) -> Fraction:
        return linalg.trace(self.T_matrix(w))

    # derived generators for affine modules
    def complete_affine(self) -> "HeckeModule":
        """Fill in T_(s0) and T_gamma from the Bernstein-Lusztig relations."""
        A = self.algebra
        G = A.G
        self.T[0] = self.act_bl(A.bl_of_generator(0))
        self.labels = tuple(sorted(set(self.labels) | {0}))
        for g in G.omega:
            if g != G.identity:
                self.omega[g] = self.act_bl(A.bl_of_nearly_dominant(g))
        self._tcache.clear()
        return self

    # relations
    def relation_failures(self) -> List[str]:
        """Names of the defining relations that fail (empty for a module)."""
        bad = []
        one = self.identity()
        sysm = self.system
        finite_labels = [s for s in self.labels if s != 0]
        for s in self.labels:
            q = linalg.to_fmpq(self.qval(s))
            m = self.T[s]
            if (m - one * q) * (m + one) != linalg.zeros(self.dim, self.dim):
                bad.append(f"quadratic {s}")
        for i, s in enumerate(self.labels):
            for t in self.labels[i + 1:]:
                m = coxeter_order(sysm, s, t)
                if m is None:
                    continue
                a, b = one, one
                for k in range(m):
                    a = a * self.T[s if k % 2 == 0 else t]
                    b = b * self.T[t if k % 2 == 0 else s]
                if a != b:
                    bad.append(f"braid {s},{t}")
        if self.theta is not None:
            A = self.algebra
            n = len(self.theta)
            for i in range(n):
                for j in range(i + 1, n):
                    if self.theta[i] * self.theta[j] != self.theta[j] * self.theta[i]:
                        bad.append(f"theta commute {i},{j}")
            W = A.W
            for s in finite_labels:
                for k in range(n):
                    x = tuple(int(k == j) for j in range(n))
                    sx = W.gens[s](x)
                    lhs = self.theta_matrix(x) * self.T[s] - self.T[s] * self.theta_matrix(sx)
                    rhs = linalg.zeros(self.dim, self.dim)
                    for z, c in A.commute_correction(x, s).items():
                        rhs += self.theta_matrix(z) * linalg.to_fmpq(self.spec(c))
                    if lhs != rhs:
                        bad.append(f"Bernstein relation s{s}, e{k}")
        if self.omega:
            G = self.algebra.G
            for g, mg in self.omega.items():
                ginv = G.inverse(g)
                for s in self.labels:
                    conj = G.mul(G.mul(g, G.gens[s]), ginv)
                    t = next((u for u in G.labels if G.gens[u] == conj), None)
                    if t is None or t not in self.T:
                        bad.append(f"omega conjugation {s}")
                        continue
                    if mg * self.T[s] != self.T[t] * mg:
                        bad.append(f"omega conjugation {s}")
                for h, mh in self.omega.items():
                    gh = G.mul(g, h)
                    target = one if gh == G.identity else self.omega[gh]
                    if mg * mh != target:
                        bad.append("omega group law")
        return bad

    def check(self) -> "HeckeModule":
        bad = self.relation_failures()
        if bad:
            raise NotAModule("relations fail: " + ", ".join(bad))
        return self

    def __repr__(self):
        kind = "affine" if self.is_affine else "finite"
        return f"HeckeModule({kind}, dim={self.dim}, labels={self.labels}{', ' + self.name if self.name else ''})"


# construction -------------------------------------------------------------

def v_values_for(algebra: HeckeAlgebra, qvals: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    from .coefficients import v_values
    ids = {sym.id for sym in algebra.symbols.values()}
    missing = ids - {int(k) for k in qvals}
    if missing:
        raise ValueError(f"no value for parameter classes {sorted(missing)}")
    return v_values({k: v for k, v in qvals.items() if int(k) in ids})


def from_matrices(algebra: HeckeAlgebra, qvals: Mapping[int, Fraction], mats: Mapping[int, Sequence],
                  name: str = "") -> HeckeModule:
    vv = v_values_for(algebra, qvals)
    T = {s: linalg.matrix(m) for s, m in mats.items()}
    dim = next(iter(T.values())).nrows()
    return HeckeModule(algebra, vv, dim, T, name=name).check()


def one_dimensional_modules(algebra: HeckeAlgebra, qvals: Mapping[int, Fraction]) -> List[HeckeModule]:
    """All one-dimensional modules of a finite Hecke algebra (T_s -> q_s or -1)."""
    from itertools import product
    vv = v_values_for(algebra, qvals)
    labels = sorted(algebra.system.gens)
    out = []
    for choice in product((0, 1), repeat=len(labels)):
        T = {}
        for s, c in zip(labels, choice):
            val = specialize(algebra.q(s), vv, v_given=True) if c else Fraction(-1)
            T[s] = linalg.matrix([[val]])
        name = "".join("q" if c else "-" for c in choice)
        M = HeckeModule(algebra, vv, 1, T, name=f"1-dim[{name}]")
        if not M.relation_failures():
            out.append(M)
    return out


def two_dimensional_modules(algebra: HeckeAlgebra, qvals: Mapping[int, Fraction], s: int, t: int) -> List[HeckeModule]:
    """Two-dimensional modules of the dihedral subalgebra on s, t.

    T_s = [[-1, 0], [1, q_s]], T_t = [[q_t, b], [0, -1]] with
    b = q_s + q_t + 2 cos(2 pi k / m) v_s v_t, for the k giving a rational cosine.
    """
    vv = v_values_for(algebra, qvals)
    m = coxeter_order(algebra.system, s, t)
    cosines = {3: [Fraction(-1, 2)], 4: [Fraction(0)], 6: [Fraction(1, 2), Fraction(-1, 2)]}.get(m)
    if cosines is None:
        raise ValueError(f"no rational two-dimensional modules for m = {m}")
    qs = specialize(algebra.q(s), vv, v_given=True)
    qt = specialize(algebra.q(t), vv, v_given=True)
    vs = specialize(algebra.vq(s), vv, v_given=True)
    vt = specialize(algebra.vq(t), vv, v_given=True)
    out = []
    for k, c in enumerate(cosines, start=1):
        b = qs + qt + 2 * c * vs * vt
        T = {s: linalg.matrix([[-1, 0], [1, qs]]), t: linalg.matrix([[qt, b], [0, -1]])}
        out.append(HeckeModule(algebra, vv, 2, T, labels=(s, t), name=f"2-dim[s{s},s{t},k={k}]").check())
    return out


def character_module(algebra: AffineHeckeAlgebra, qvals: Mapping[int, Fraction], t: Sequence) -> HeckeModule:
    """One-dimensional module of the commutative part: theta_(e_k) -> t_k."""
    t = [Fraction(x) for x in t]
    if any(x == 0 for x in t):
        raise IllegalCharacter("character values must be nonzero")
    if len(t) != algebra.datum.rank:
        raise IllegalCharacter("one value per basis vector of X expected")
    vv = v_values_for(algebra, qvals)
    return HeckeModule(algebra, vv, 1, {}, theta=[linalg.matrix([[x]]) for x in t], labels=(),
                       name=f"chi{tuple(str(x) for x in t)}")


def res(M: HeckeModule, I) -> HeckeModule:
    """Restriction to the parabolic subalgebra of I (theta's are kept)."""
    I = tuple(sorted(I))
    return HeckeModule(M.algebra, M.vvals, M.dim, {s: M.T[s] for s in I}, theta=M.theta, labels=I,
                       name=f"Res_{set(I) or '{}'}({M.name})")


def ind(N: HeckeModule, I) -> HeckeModule:
    """Induction from the parabolic subalgebra of I to the whole algebra."""
    I = tuple(sorted(I))
    bad = N.relation_failures()
    if bad:
        raise NotAModule("cannot induce: " + ", ".join(bad))
    A = N.algebra
    affine = N.is_affine
    fsys = A.W if affine else A.system
    fin = A.finite_algebra if affine else A
    reps = min_coset_reps(fsys, I)
    pos = {x: k for k, x in enumerate(reps)}
    d = N.dim
    D = len(reps) * d
    split_cache: Dict = {}

    def split(w):
        got = split_cache.get(w)
        if got is None:
            got = factor_parabolic(fsys, w, I)
            split_cache[w] = got
        return got

    def build(expansion_of) -> Matrix:
        M = linalg.zeros(D, D)
        for x in reps:
            col = pos[x] * d
            for (w, mu), c in expansion_of(x).items():
                x2, u = split(w)
                row = pos[x2] * d
                block = N.T_finite(u)
                if mu is not None:
                    block = block * N.theta_matrix(mu)
                block = block * linalg.to_fmpq(N.spec(c))
                for i in range(d):
                    for j in range(d):
                        if block[i, j] != 0:
                            M[row + i, col + j] += block[i, j]
        return M

    T = {}
    for s in fsys.labels if hasattr(fsys, "labels") else sorted(fsys.gens):
        g = fsys.gens[s]
        T[s] = build(lambda x, g=g: {(w, None): c for w, c in fin._right_basis({g: LaurentPoly.const(1)}, x).items()})
    theta = None
    if affine:
        n = A.datum.rank
        theta = []
        for k in range(n):
            e = tuple(int(k == j) for j in range(n))
            theta.append(build(lambda x, e=e: A._push(e, x)))
    out = HeckeModule(A, N.vvals, D, T, theta=theta, name=f"Ind_{set(I) or '{}'}({N.name})")
    if affine:
        out.complete_affine()
    return out


def principal_series(algebra: AffineHeckeAlgebra, qvals: Mapping[int, Fraction], t: Sequence) -> HeckeModule:
    """Module induced from the character theta_(e_k) -> t_k of the commutative part."""
    return ind(character_module(algebra, qvals, t), ())


def twist_star(M: HeckeModule) -> HeckeModule:
    """pi*(h) = pi(h*): T_s -> -q_s pi(T_s)^-1, T_gamma -> (-1)^l(w_Omega) pi(T_gamma)."""
    one = M.identity()
    T = {s: one * linalg.to_fmpq(M.qval(s) - 1) - M.T[s] for s in M.labels}
    if not M.is_affine:
        return HeckeModule(M.algebra, M.vvals, M.dim, T, labels=M.labels, name=f"({M.name})*")
    A = M.algebra
    G = A.G
    W = G.W
    omega = {g: (m if W.length(g.fin) % 2 == 0 else -m) for g, m in M.omega.items()}
    out = HeckeModule(A, M.vvals, M.dim, T, omega=omega, theta=None, labels=M.labels, name=f"({M.name})*")
    return fill_theta_from_T(out)


def fill_theta_from_T(M: HeckeModule) -> HeckeModule:
    """Set theta_(e_k) from the T matrices of an affine module.

    theta_x = q(t_x1)^(-1/2) T_(t_x1) (q(t_lam)^(-1/2) T_(t_lam))^-1 where
    lam and x1 = x + lam are dominant.
    """
    A = M.algebra
    G = A.G
    n = A.datum.rank
    theta = []
    for k in range(n):
        e = tuple(int(k == j) for j in range(n))
        lam = G.dominant_shift(e)
        x1 = tuple(a + b for a, b in zip(e, lam))
        t1, t2 = G.translation(x1), G.translation(lam)
        c = M.spec(G.sqrt_q_of(t2)) / M.spec(G.sqrt_q_of(t1))
        theta.append(M.T_matrix(t1) * M.T_matrix(t2).inv() * linalg.to_fmpq(c))
    M.theta = theta
    M._theta_inv = [m.inv() for m in theta]
    M._thcache.clear()
    return M


def affine_one_dimensional_modules(algebra: AffineHeckeAlgebra, qvals: Mapping[int, Fraction]) -> List[HeckeModule]:
    """One-dimensional modules with T_s -> q_s or -1 (all s, s0 included) and T_gamma -> +-1."""
    from itertools import product
    vv = v_values_for(algebra, qvals)
    G = algebra.G
    labels = list(G.labels)
    others = [g for g in G.omega if g != G.identity]
    out = []
    for choice in product((0, 1), repeat=len(labels)):
        T = {}
        for s, c in zip(labels, choice):
            val = specialize(algebra.q(s), vv, v_given=True) if c else Fraction(-1)
            T[s] = linalg.matrix([[val]])
        for signs in product((1, -1), repeat=len(others)):
            omega = {g: linalg.matrix([[e]]) for g, e in zip(others, signs)}
            name = "".join("q" if c else "-" for c in choice) + "".join("+" if e > 0 else "-" for e in signs)
            M = HeckeModule(algebra, vv, 1, T, omega=omega, labels=labels, name=f"1-dim[{name}]")
            if M.relation_failures():
                continue
            fill_theta_from_T(M)
            if not M.relation_failures():
                out.append(M)
    return out


# virtual modules ----------------------------------------------------------

class VirtualModule:
    """A signed sum of modules, compared through traces."""

    def __init__(self, summands: Iterable[Tuple[int, HeckeModule]]):
        self.summands = list(summands)

    @classmethod
    def of(cls, M: HeckeModule, sign: int = 1) -> "VirtualModule":
        return cls([(sign, M)])

    def __add__(self, other):
        return VirtualModule(self.summands + other.summands)

    def __neg__(self):
        return VirtualModule([(-s, M) for s, M in self.summands])

    def __sub__(self, other):
        return self + (-other)

    def trace(self, w) -> Fraction:
        return sum((s * M.trace(w) for s, M in self.summands), Fraction(0))

    def dims(self) -> List[Tuple[int, int]]:
        return [(s, M.dim) for s, M in self.summands]


def virtual_trace(V: VirtualModule, w) -> Fraction:
    return V.trace(w)


def d_operator(M: HeckeModule) -> VirtualModule:
    """D[M] = sum over I in S of (-1)^|I| Ind_I Res_I M."""
    from .weyl import subsets
    labels = M.finite_system.labels if hasattr(M.finite_system, "labels") else sorted(M.finite_system.gens)
    return VirtualModule([((-1) ** len(I), ind(res(M, I), I)) for I in subsets(labels)])


def witness_elements(algebra: HeckeAlgebra, bound: Optional[int] = None) -> list:
    """The basis elements used as trace witnesses.

    Finite algebras use every group element; affine ones use every w with
    l(w) <= bound, which already includes gamma * tau for all gamma.
    """
    if isinstance(algebra, AffineHeckeAlgebra):
        return algebra.G.ball(bound if bound is not None else 6)
    return list(algebra.system.elements)


def describe(algebra: HeckeAlgebra, w) -> str:
    sysm = algebra.system
    gamma, word = sysm.decompose(w)
    lab = "T_" + (".".join(f"s{s}" for s in word) or "e")
    if isinstance(algebra, AffineHeckeAlgebra) and gamma != sysm.identity:
        lab = f"T_g{sysm.omega.index(gamma)}" + ("*" + lab if word else "")
    return lab


def grothendieck_equal(V1: VirtualModule, V2: VirtualModule, algebra: HeckeAlgebra,
                       bound: Optional[int] = None, suite: str = "grothendieck",
                       instance: Optional[dict] = None) -> VerificationReport:
    rep = VerificationReport(suite, instance or {})
    affine = isinstance(algebra, AffineHeckeAlgebra)
    rep.notes["witnesses"] = "l(w) <= %d (verified up to this length bound)" % bound if affine else "full basis"
    for w in witness_elements(algebra, bound):
        a, b = V1.trace(w), V2.trace(w)
        rep.add(describe(algebra, w), a, b)
    return rep
