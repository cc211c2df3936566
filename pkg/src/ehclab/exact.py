"""Exact arithmetic: integer polynomials, cyclotomic numbers and reduction mod l.

Character values are stored as elements of Q(zeta_N) in the power basis
zeta_N^0 .. zeta_N^(phi(N)-1).  Bulk computations use "root sums": integer
combinations of N-th roots of unity, kept as {exponent: multiplicity}
mappings and only reduced to the power basis when compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

import sympy

from .errors import (DenominatorNotEllIntegral, NotCyclotomicProduct,
                     ZeroInput)

Rational = Fraction


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    return int(sympy.mobius(n))


def ell_valuation(m: int, ell: int) -> int:
    """Largest k with ell**k dividing m."""
    if m == 0:
        raise ZeroInput("valuation of 0 is undefined")
    m = abs(m)
    k = 0
    while m % ell == 0:
        m //= ell
        k += 1
    return k


def ell_part(m: int, ell: int) -> int:
    return ell ** ell_valuation(m, ell)


# ---------------------------------------------------------------- polynomials

class UniPoly:
    """Integer polynomial, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> "UniPoly":
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        """Division over Z; raises ValueError if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return UniPoly(), UniPoly(rem)
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("quotient is not integral")
            t = c // lead
            quot[i - dq] = t
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= t * b
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        """True iff self divides other in Z[x]."""
        try:
            return divmod(other, self)[1].is_zero()
        except ValueError:
            return False

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> "UniPoly":
        """p(x**k)."""
        out = [0] * (self.degree * k + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UniPoly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly((other,))
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", s))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, s in terms[1:]:
            out += f" {sign} {s}"
        return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = UniPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p // cyclotomic_polynomial(d)
    return p


@dataclass(frozen=True)
class CycloFactorisation:
    """p = unit * x**a * prod Phi_e**a_e."""

    a: int
    factors: tuple  # sorted ((e, multiplicity), ...)
    unit: int

    @property
    def factor_map(self) -> dict:
        return dict(self.factors)

    def multiplicity(self, e: int) -> int:
        return self.factor_map.get(e, 0)

    def expand(self) -> UniPoly:
        p = UniPoly.monomial(self.a, self.unit)
        for e, m in self.factors:
            p = p * cyclotomic_polynomial(e) ** m
        return p


def factor_into_cyclotomics(p: UniPoly) -> CycloFactorisation:
    """Factor p as +-x^a times a product of cyclotomic polynomials by trial division."""
    if p.is_zero():
        raise ZeroInput("cannot factor the zero polynomial")
    a = next(i for i, c in enumerate(p.coeffs) if c)
    cur = UniPoly(p.coeffs[a:])
    deg0 = cur.degree
    factors = {}
    e = 1
    bound = 2 * deg0 * deg0 + 2
    while cur.degree > 0 and e <= bound:
        if euler_phi(e) <= cur.degree:
            phi_e = cyclotomic_polynomial(e)
            while cur.degree >= phi_e.degree:
                q, r = divmod(cur, phi_e)
                if not r.is_zero():
                    break
                cur = q
                factors[e] = factors.get(e, 0) + 1
        e += 1
    if cur.degree != 0 or abs(cur.coeffs[0]) != 1:
        raise NotCyclotomicProduct(f"residual factor {cur} is not a unit")
    return CycloFactorisation(a, tuple(sorted(factors.items())), cur.coeffs[0])


# --------------------------------------------------------- cyclotomic numbers

@lru_cache(maxsize=None)
def _phi_lower(n: int) -> tuple:
    """Non-leading terms (degree, coefficient) of Phi_n."""
    c = cyclotomic_polynomial(n).coeffs
    return tuple((d, v) for d, v in enumerate(c[:-1]) if v)


def reduce_dense(n: int, acc: list) -> list:
    """Reduce a dense coefficient list modulo Phi_n (in place); returns the phi(n) low terms."""
    phi = euler_phi(n)
    lower = _phi_lower(n)
    for j in range(len(acc) - 1, phi - 1, -1):
        c = acc[j]
        if c:
            base = j - phi
            for d, v in lower:
                acc[base + d] -= c * v
            acc[j] = 0
    if len(acc) < phi:
        acc.extend([0] * (phi - len(acc)))
    return acc[:phi]


def rootsum_dense(n: int, terms) -> list:
    """Dense length-n integer vector of a root sum given as {exp: mult} or pairs."""
    acc = [0] * n
    items = terms.items() if isinstance(terms, Mapping) else terms
    for k, m in items:
        acc[k % n] += m
    return acc


def rootsum_normal_form(n: int, terms) -> tuple:
    """Power-basis coefficients (as ints) of an integer combination of n-th roots of unity."""
    return tuple(reduce_dense(n, rootsum_dense(n, terms)))


@lru_cache(maxsize=None)
def _ramanujan(n: int) -> tuple:
    out = []
    phi = euler_phi(n)
    for i in range(n):
        g = gcd(i, n)
        m = n // g
        out.append(mobius(m) * phi // euler_phi(m))
    return tuple(out)


class CyclotomicNumber:
    """Element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("conductor", "coefficients")

    def __init__(self, conductor: int, coefficients: Iterable):
        coeffs = tuple(Fraction(c) for c in coefficients)
        phi = euler_phi(conductor)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coefficients = coeffs

    # -- constructors
    @classmethod
    def from_rational(cls, r, conductor: int = 1) -> "CyclotomicNumber":
        phi = euler_phi(conductor)
        return cls(conductor, (Fraction(r),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, conductor: int = 1):
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1):
        return cls.from_rational(1, conductor)

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CyclotomicNumber":
        return cls.from_root_sum(conductor, {k % conductor: 1})

    @classmethod
    def from_root_sum(cls, conductor: int, terms, scale=1) -> "CyclotomicNumber":
        """sum of mult * zeta_N**exp, optionally times a rational scale."""
        nf = rootsum_normal_form(conductor, terms)
        s = Fraction(scale)
        return cls(conductor, (s * c for c in nf))

    @classmethod
    def from_dense(cls, conductor: int, dense: list) -> "CyclotomicNumber":
        return cls(conductor, reduce_dense(conductor, list(dense)))

    @classmethod
    def coerce(cls, x) -> "CyclotomicNumber":
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CyclotomicNumber")

    # -- structure
    def embed(self, m: int) -> "CyclotomicNumber":
        """Same element written with conductor m (requires N | m)."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"conductor {n} does not divide {m}")
        k = m // n
        dense = [Fraction(0)] * max((len(self.coefficients) - 1) * k + 1, 1)
        for i, c in enumerate(self.coefficients):
            dense[i * k] = c
        return CyclotomicNumber.from_dense(m, dense)

    def _common(self, other):
        other = CyclotomicNumber.coerce(other)
        if other.conductor == self.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CyclotomicNumber(a.conductor, (x + y for x, y in zip(a.coefficients, b.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, (-c for c in self.coefficients))

    def __sub__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CyclotomicNumber(a.conductor, (x - y for x, y in zip(a.coefficients, b.coefficients)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.conductor, (c * other for c in self.coefficients))
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        n = a.conductor
        ca, cb = a.coefficients, b.coefficients
        out = [Fraction(0)] * (len(ca) + len(cb) - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        out[i + j] += x * y
        return CyclotomicNumber.from_dense(n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "CyclotomicNumber":
        """1/x as (product of the other Galois conjugates) / norm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        rest = CyclotomicNumber.one(n)
        for k in range(2, n):
            if gcd(k, n) == 1:
                rest = rest * self.galois(k)
        norm = (self * rest).to_rational()
        return rest * (Fraction(1) / norm)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicNumber.one(self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugate, zeta -> zeta**-1."""
        n = self.conductor
        dense = [Fraction(0)] * n
        for i, c in enumerate(self.coefficients):
            dense[(-i) % n] += c
        return CyclotomicNumber.from_dense(n, dense)

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under zeta -> zeta**k, gcd(k, N) = 1."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        dense = [Fraction(0)] * n
        for i, c in enumerate(self.coefficients):
            dense[(i * k) % n] += c
        return CyclotomicNumber.from_dense(n, dense)

    # -- predicates
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coefficients[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coefficients[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_integral(self) -> bool:
        """Algebraic integer test (the power basis is an integral basis)."""
        return all(c.denominator == 1 for c in self.coefficients)

    def trace(self) -> Fraction:
        """Trace down to Q."""
        r = _ramanujan(self.conductor)
        return sum((c * r[i] for i, c in enumerate(self.coefficients)), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        return a.coefficients == b.coefficients

    def __hash__(self):
        # trace / phi(N) does not depend on the conductor used
        return hash(self.trace() / euler_phi(self.conductor))

    def __complex__(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(float(c)) * z ** i for i, c in enumerate(self.coefficients))

    def __repr__(self):
        if self.is_rational():
            return str(self.coefficients[0])
        n = self.conductor
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{n}" if i == 1 else f"z{n}^{i}")
            if mono and abs(c) == 1:
                s = mono
            elif mono:
                s = f"{abs(c)}*{mono}"
            else:
                s = str(abs(c))
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


# ------------------------------------------------------------ reduction mod l

def _poly_mulmod(a, b, mod, ell):
    k = len(mod) - 1
    out = [0] * (2 * k - 1 if k else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % ell
    for j in range(len(out) - 1, k - 1, -1):
        c = out[j]
        if c:
            for d in range(k):
                out[j - k + d] = (out[j - k + d] - c * mod[d]) % ell
            out[j] = 0
    return tuple(out[:k]) if k else ()


@lru_cache(maxsize=None)
def irreducible_factors_mod(n: int, ell: int) -> tuple:
    """Monic irreducible factors of Phi_n over F_ell, sorted lexicographically.

    Each factor is a tuple of coefficients in 0..ell-1, lowest degree first.
    """
    x = sympy.Symbol("x")
    coeffs = cyclotomic_polynomial(n).coeffs
    poly = sympy.Poly(list(reversed(coeffs)), x, modulus=ell)
    _, facs = poly.factor_list()
    out = []
    for f, _mult in facs:
        hi_first = [int(c) % ell for c in f.all_coeffs()]
        inv = pow(hi_first[0], -1, ell)
        out.append(tuple(c * inv % ell for c in reversed(hi_first)))
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class EllReduction:
    """Ring map Z[zeta_N]_(l) -> F_{l^k} sending zeta_N to a root of a chosen factor."""

    ell: int
    conductor: int
    ell_free_part: int
    degree: int
    modulus: tuple
    zeta_image: tuple
    factor_index: int
    n_factors: int

    @property
    def field_size(self) -> int:
        return self.ell ** self.degree

    def zero(self):
        return (0,) * self.degree

    def one(self):
        return (1,) + (0,) * (self.degree - 1)

    def add(self, a, b):
        return tuple((x + y) % self.ell for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.ell for x in a)

    def scale(self, a, c: int):
        return tuple((x * c) % self.ell for x in a)

    def mul(self, a, b):
        return _poly_mulmod(a, b, self.modulus, self.ell)

    def power_of_zeta(self, j: int):
        return self._zeta_powers()[j % self.conductor]

    def _zeta_powers(self):
        cache = _ZETA_CACHE.get(self)
        if cache is None:
            cache = [self.one()]
            for _ in range(self.conductor - 1):
                cache.append(self.mul(cache[-1], self.zeta_image))
            _ZETA_CACHE[self] = cache
        return cache

    def reduce_rational(self, r) -> int:
        r = Fraction(r)
        if r.denominator % self.ell == 0:
            raise DenominatorNotEllIntegral(f"{r} is not {self.ell}-integral")
        return r.numerator * pow(r.denominator, -1, self.ell) % self.ell

    def reduce(self, x: CyclotomicNumber):
        """Image of an l-integral cyclotomic number."""
        if self.conductor % x.conductor:
            raise ValueError(f"conductor {x.conductor} does not divide {self.conductor}")
        x = x.embed(self.conductor)
        pows = self._zeta_powers()
        acc = [0] * self.degree
        for i, c in enumerate(x.coefficients):
            if c:
                r = self.reduce_rational(c)
                for t, v in enumerate(pows[i]):
                    acc[t] = (acc[t] + r * v) % self.ell
        return tuple(acc)

    def reduce_root_sum(self, terms, conductor: int | None = None):
        """Image of an integer root sum; exponents are taken modulo `conductor` (default N)."""
        n = conductor or self.conductor
        k = self.conductor // n
        pows = self._zeta_powers()
        acc = [0] * self.degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, m in items:
            v = pows[(e * k) % self.conductor]
            for t in range(self.degree):
                acc[t] = (acc[t] + m * v[t]) % self.ell
        return tuple(acc)


_ZETA_CACHE: dict = {}


def make_ell_reduction(n: int, ell: int, factor_index: int = 0) -> EllReduction:
    """Reduction of Z[zeta_n] at the prime above ell given by a factor of Phi_{n'} mod ell.

    n' is the ell-free part of n; factor_index 0 picks the lexicographically
    least monic irreducible factor.
    """
    if not sympy.isprime(ell):
        raise ValueError(f"{ell} is not prime")
    m = n
    while m % ell == 0:
        m //= ell
    factors = irreducible_factors_mod(m, ell)
    f = factors[factor_index]
    k = len(f) - 1
    if k == 1:
        zeta = ((-f[0]) % ell,)
    else:
        zeta = (0, 1) + (0,) * (k - 2)
    return EllReduction(ell, n, m, k, f, zeta, factor_index, len(factors))
