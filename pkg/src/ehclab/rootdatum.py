"""Root data of type GL_n / SL_n, Weyl groups, order polynomials and prime classifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, prod

import sympy
from sympy.matrices.normalforms import smith_normal_form

from .errors import EllDividesQ, TwistedUnsupported, UnsupportedType
from .exact import (UniPoly, cyclotomic_polynomial, euler_phi,
                    factor_into_cyclotomics)
from .fields import prime_power

# Bad primes per simple type; type A has none.
BAD_PRIMES = {
    "A": set(), "B": {2}, "C": {2}, "D": {2},
    "G2": {2, 3}, "F4": {2, 3}, "E6": {2, 3}, "E7": {2, 3}, "E8": {2, 3, 5},
}


def _mat_vec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def _mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def charpoly_int(M) -> UniPoly:
    """det(x I - M) for an integer matrix (Faddeev-LeVerrier, exact)."""
    n = len(M)
    if n == 0:
        return UniPoly((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    prev = [[Fraction(0)] * n for _ in range(n)]
    I = _identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        # Mk = M (M_{k-1} + c_{n-k+1} I)
        base = [[prev[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(M[i][t] * base[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -Fraction(sum(Mk[i][i] for i in range(n)), k)
        coeffs[n - k] = c
        prev = Mk
    for x in coeffs:
        if Fraction(x).denominator != 1:
            raise ArithmeticError("non-integral characteristic polynomial")
    return UniPoly(int(x) for x in coeffs)


@dataclass(frozen=True)
class RootDatum:
    """Root datum with X = Z^r, Y = Z^r paired by the dot product."""

    type_label: str
    n: int
    rank: int
    roots: tuple
    coroots: tuple
    simple: tuple
    ambient: tuple | None = None  # rows: images of the Y basis in Z^n (type A labels)

    def pairing(self, x, y) -> int:
        return sum(a * b for a, b in zip(x, y))

    @cached_property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @cached_property
    def degrees(self) -> tuple:
        if self.type_label == "GL_n":
            return tuple(range(1, self.n + 1))
        return tuple(range(2, self.n + 1))

    def reflection_on_Y(self, i: int):
        """Matrix of s_alpha on Y: y -> y - <alpha, y> alpha_check."""
        a, ac = self.roots[i], self.coroots[i]
        r = self.rank
        return tuple(tuple((1 if row == col else 0) - a[col] * ac[row] for col in range(r)) for row in range(r))

    @cached_property
    def coroot_index(self) -> dict:
        return {c: i for i, c in enumerate(self.coroots)}

    def dual(self) -> "RootDatum":
        label = {"GL_n": "GL_n", "SL_n": "PGL_n", "PGL_n": "SL_n"}[self.type_label]
        return RootDatum(label, self.n, self.rank, self.coroots, self.roots, self.simple,
                         None if label != "GL_n" else self.ambient)

    @cached_property
    def centre_component_torsion(self) -> tuple:
        """Elementary divisors > 1 of the torsion of X / Z Phi."""
        if not self.roots:
            return ()
        M = sympy.Matrix(self.roots)
        snf = smith_normal_form(M, domain=sympy.ZZ)
        divs = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
        return tuple(d for d in divs if d > 1)


@dataclass(frozen=True)
class FrobeniusAction:
    q: int
    p: int
    phi: tuple  # integer matrix on Y, identity for untwisted types

    @property
    def untwisted(self) -> bool:
        return self.phi == _identity(len(self.phi))


@dataclass(frozen=True)
class DualityData:
    dual_datum: RootDatum
    dual_frobenius: FrobeniusAction


def _gl_datum(n: int) -> RootDatum:
    roots, coroots = [], []
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for i, j in pairs:
        v = tuple(1 if k == i else -1 if k == j else 0 for k in range(n))
        roots.append(v)
        coroots.append(v)
    simple = tuple(pairs.index((i, i + 1)) for i in range(n - 1))
    return RootDatum("GL_n", n, n, tuple(roots), tuple(coroots), simple, _identity(n))


def _sl_datum(n: int) -> RootDatum:
    r = n - 1
    roots, coroots = [], []
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for a, b in pairs:
        # root in the fundamental-weight basis: pairings with simple coroots e_j - e_{j+1}
        ev = [1 if k == a else -1 if k == b else 0 for k in range(n)]
        roots.append(tuple(ev[j] - ev[j + 1] for j in range(r)))
        lo, hi = min(a, b), max(a, b)
        sign = 1 if a < b else -1
        coroots.append(tuple(sign if lo <= j < hi else 0 for j in range(r)))
    simple = tuple(pairs.index((i, i + 1)) for i in range(r))
    ambient = tuple(tuple(1 if k == j else -1 if k == j + 1 else 0 for k in range(n)) for j in range(r))
    return RootDatum("SL_n", n, r, tuple(roots), tuple(coroots), simple, ambient)


def build_group(gtype: str, n: int, q: int):
    """(RootDatum, FrobeniusAction, DualityData) for GL_n(q) or SL_n(q)."""
    gtype = gtype.upper()
    if gtype == "GL":
        R = _gl_datum(n)
    elif gtype == "SL":
        if n < 2:
            raise UnsupportedType("SL_n requires n >= 2")
        R = _sl_datum(n)
    else:
        raise UnsupportedType(f"unsupported group type {gtype}")
    p, _ = prime_power(q)
    F = FrobeniusAction(q, p, _identity(R.rank))
    return R, F, DualityData(R.dual(), F)


class WeylGroup:
    """Weyl group enumerated as integer matrices acting on Y."""

    def __init__(self, R: RootDatum):
        self.datum = R
        r = R.rank
        self.gens = [R.reflection_on_Y(i) for i in R.simple]
        ident = _identity(r)
        self.elements = [ident]
        self.length = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.gens:
                    v = _mat_mul(w, s)
                    if v not in self.length:
                        self.length[v] = self.length[w] + 1
                        self.elements.append(v)
                        nxt.append(v)
            frontier = nxt
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.identity = ident

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        return _mat_mul(a, b)

    @cached_property
    def inverses(self) -> list:
        out = [None] * len(self.elements)
        for i, w in enumerate(self.elements):
            for j, v in enumerate(self.elements):
                if _mat_mul(w, v) == self.identity:
                    out[i] = j
                    break
        return out

    def inv(self, w):
        return self.elements[self.inverses[self.index[w]]]

    @cached_property
    def root_perms(self) -> list:
        """For each element, the permutation of root indices it induces (via coroots)."""
        R = self.datum
        out = []
        for w in self.elements:
            out.append(tuple(R.coroot_index[_mat_vec(w, c)] for c in R.coroots))
        return out

    def act_on_roots(self, w, idxs) -> frozenset:
        perm = self.root_perms[self.index[w]]
        return frozenset(perm[i] for i in idxs)

    def subgroup_generated_by_roots(self, idxs) -> list:
        """Elements of the reflection subgroup W_L generated by the given roots."""
        R = self.datum
        gens = [R.reflection_on_Y(i) for i in idxs]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    v = _mat_mul(w, s)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return sorted(self.index[w] for w in seen)


@lru_cache(maxsize=None)
def weyl_group(gtype: str, n: int) -> WeylGroup:
    R, _, _ = build_group(gtype, n, 2)
    return WeylGroup(R)


def order_polynomial(R: RootDatum, F: FrobeniusAction) -> UniPoly:
    """x^N prod (x^d_i - 1) for untwisted Frobenius."""
    if not F.untwisted:
        raise TwistedUnsupported("group order formula implemented for untwisted Frobenius only")
    p = UniPoly.monomial(R.n_positive)
    for d in R.degrees:
        p = p * (UniPoly.monomial(d) - 1)
    return p


def torus_order_polynomial(w, F: FrobeniusAction | None = None) -> UniPoly:
    """det(x I - w phi) on the (co)character lattice."""
    if F is not None and not F.untwisted:
        w = _mat_mul(w, F.phi)
    return charpoly_int(w)


def multiplicative_order_e(q: int, ell: int) -> int:
    """Order of q mod ell (mod 4 if ell = 2)."""
    if q % ell == 0:
        raise EllDividesQ(f"{ell} divides {q}")
    if ell == 2:
        return 1 if q % 4 == 1 else 2
    e, x = 1, q % ell
    while x != 1:
        x = x * q % ell
        e += 1
    return e


@dataclass(frozen=True)
class PrimeContext:
    ell: int
    e: int
    good: bool
    in_gamma: bool
    large: bool
    e0: int | None
    e_values: tuple  # every m with Phi_m | P_G and ell | Phi_m(q)
    gamma_failures: tuple = field(default=())

    @property
    def E_generator(self) -> tuple:
        """(e, ell) generating E_{q,ell} = {e ell^m}."""
        return (self.e, self.ell)

    def adapted(self, e0: int) -> bool:
        return self.large and self.e0 == e0


def centre_component_order(R: RootDatum, q: int, p: int) -> int:
    """|Z(G)^F : Z°(G)^F| for untwisted F, from the torsion of X / Z Phi."""
    out = 1
    for d in R.centre_component_torsion:
        while d % p == 0:
            d //= p
        out *= gcd(d, q - 1)
    return out


def classify_prime(R: RootDatum, F: FrobeniusAction, ell: int) -> PrimeContext:
    if not sympy.isprime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == F.p:
        raise EllDividesQ(f"ell = p = {ell} is excluded")
    q = F.q
    e = multiplicative_order_e(q, ell)
    simple_type = "A"
    good = ell not in BAD_PRIMES[simple_type]
    failures = []
    if ell == 2:
        failures.append("ell is even")
    if not good:
        failures.append("ell is bad")
    if centre_component_order(R, q, F.p) % ell == 0:
        failures.append("ell divides |Z(G)^F : Z°(G)^F|")
    Rd = R.dual()
    if centre_component_order(Rd, q, F.p) % ell == 0:
        failures.append("ell divides |Z(G*)^F : Z°(G*)^F|")
    fac = factor_into_cyclotomics(order_polynomial(R, F))
    e_values = tuple(m for m, _ in fac.factors if cyclotomic_polynomial(m)(q) % ell == 0)
    # odd primes only, as in the definition of large primes used for adapted e0
    large = len(e_values) == 1 and ell != 2
    return PrimeContext(ell, e, good, not failures, large, e_values[0] if large else None,
                        e_values, tuple(failures))


def hypothesis_3_3_check(R: RootDatum, F: FrobeniusAction, ell: int):
    """(ok, reasons): ell in Gamma, ell >= 5, Mackey formula known (always for type A)."""
    reasons = []
    try:
        ctx = classify_prime(R, F, ell)
    except EllDividesQ:
        return False, ["ell = p"]
    if not ctx.in_gamma:
        reasons.append("ell not in Gamma(G,F): " + ", ".join(ctx.gamma_failures))
    if ell < 5:
        reasons.append("ell<5")
    return not reasons, reasons
