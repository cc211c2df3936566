"""Partition combinatorics for unipotent characters of GL_n(q).

Unipotent characters of GL_n(q) are labelled by partitions of n.  Their
l-blocks (l odd, e the order of q mod l) are the fibres of the e-core map,
and the characters of a block of weight w are in bijection with the
e-multipartitions of w, i.e. with Irr(Z_e wr S_w).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, lcm

from sympy.utilities.iterables import partitions as _sympy_partitions

from .exact import UniPoly, cyclotomic_polynomial, ell_valuation, factor_into_cyclotomics
from .rootdatum import multiplicative_order_e


# ----------------------------------------------------------------- partitions

def normalise(parts) -> tuple:
    """Weakly decreasing tuple of positive parts."""
    out = tuple(sorted((int(p) for p in parts if p), reverse=True))
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts}")
    return out


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []
    for p in _sympy_partitions(n):
        out.append(tuple(k for k in sorted(p, reverse=True) for _ in range(p[k])))
    return tuple(sorted(out, reverse=True))


def conjugate(lam) -> tuple:
    lam = normalise(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam) -> list:
    lam = normalise(lam)
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def n_of(lam) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(normalise(lam)))


# ------------------------------------------------------------------- abacus

def beta_set(lam, size: int) -> tuple:
    """First-column hook lengths of lam padded to `size` beads."""
    lam = normalise(lam)
    if size < len(lam):
        raise ValueError(f"beta set of size {size} too small for {lam}")
    padded = lam + (0,) * (size - len(lam))
    return tuple(padded[i] + size - 1 - i for i in range(size))


def from_beta(beta) -> tuple:
    b = sorted(beta, reverse=True)
    k = len(b)
    return normalise(b[i] - (k - 1 - i) for i in range(k))


def _bead_count(length: int, e: int) -> int:
    """Smallest even multiple of e that is at least `length`."""
    m = lcm(2, e)
    return max(m, -(-length // m) * m)


def _runners(lam, e: int):
    b = _bead_count(len(normalise(lam)), e)
    runners = [[] for _ in range(e)]
    for x in beta_set(lam, b):
        runners[x % e].append(x // e)
    return b, runners


@dataclass(frozen=True)
class ECoreQuotient:
    core: tuple
    quotient: tuple   # e partitions, runner order
    weight: int
    e: int

    @property
    def size(self) -> int:
        return sum(self.core) + self.e * self.weight


def e_core(lam, e: int) -> tuple:
    """e-core by sliding every bead of the abacus to the top of its runner."""
    if e < 1:
        raise ValueError("e must be positive")
    b, runners = _runners(lam, e)
    beta = [r * e + i for i in range(e) for r in range(len(runners[i]))]
    return from_beta(beta)


def e_quotient(lam, e: int) -> ECoreQuotient:
    if e < 1:
        raise ValueError("e must be positive")
    lam = normalise(lam)
    b, runners = _runners(lam, e)
    quot = tuple(from_beta(r) for r in runners)
    core = e_core(lam, e)
    w = (sum(lam) - sum(core)) // e
    assert sum(sum(mu) for mu in quot) == w
    return ECoreQuotient(core, quot, w, e)


def from_core_quotient(core, quotient, e: int) -> tuple:
    """Inverse of e_quotient: rebuild lambda from its e-core and e-quotient."""
    core = normalise(core)
    quotient = tuple(normalise(mu) for mu in quotient)
    if len(quotient) != e:
        raise ValueError(f"quotient needs {e} components")
    if e_core(core, e) != core:
        raise ValueError(f"{core} is not an {e}-core")
    b = _bead_count(len(core), e)
    while True:
        counts = [0] * e
        for x in beta_set(core, b):
            counts[x % e] += 1
        if all(counts[i] >= len(quotient[i]) for i in range(e)):
            break
        b += lcm(2, e)
    beta = []
    for i in range(e):
        for r in beta_set(quotient[i], counts[i]):
            beta.append(r * e + i)
    return from_beta(beta)


# -------------------------------------------------- rim-hook removal oracle

def remove_rim_hooks(lam, e: int) -> list:
    """Every partition obtained from lam by removing one rim e-hook."""
    lam = normalise(lam)
    lc = conjugate(lam)
    out = []
    for i in range(len(lam)):
        for j in range(lam[i]):
            leg = lc[j] - i - 1
            if lam[i] - j + leg == e:
                mu = list(lam)
                for r in range(i, i + leg):
                    mu[r] = lam[r + 1] - 1
                mu[i + leg] = j
                out.append(normalise(mu))
    return out


def bfs_cores(lam, e: int) -> set:
    """Terminal partitions of exhaustive rim e-hook removal over every removal order."""
    start = normalise(lam)
    seen = {start}
    todo = deque([start])
    ends = set()
    while todo:
        cur = todo.popleft()
        nxt = remove_rim_hooks(cur, e)
        if not nxt:
            ends.add(cur)
        for mu in nxt:
            if mu not in seen:
                seen.add(mu)
                todo.append(mu)
    return ends


# ------------------------------------------------------------------ degrees

@dataclass(frozen=True)
class UnipotentDegree:
    partition: tuple
    polynomial: UniPoly

    def __call__(self, q: int) -> int:
        return self.polynomial(q)

    def at_one(self) -> int:
        return self.polynomial(1)


def order_polynomial_gl(n: int) -> UniPoly:
    """|GL_n(q)| as a polynomial in q."""
    x = UniPoly.x()
    p = UniPoly.monomial(n * (n - 1) // 2)
    for i in range(1, n + 1):
        p = p * (x ** i - 1)
    return p


@lru_cache(maxsize=None)
def _degree_poly(lam: tuple) -> UniPoly:
    x = UniPoly.x()
    num = UniPoly.monomial(n_of(lam))
    for i in range(1, sum(lam) + 1):
        num = num * (x ** i - 1)
    den = UniPoly.constant(1)
    for h in hook_lengths(lam):
        den = den * (x ** h - 1)
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise ArithmeticError(f"q-hook quotient for {lam} is not a polynomial")
    return quo


def unipotent_degree(lam) -> UnipotentDegree:
    """Degree of the unipotent character labelled lam, by the q-hook formula."""
    lam = normalise(lam)
    return UnipotentDegree(lam, _degree_poly(lam))


def symmetric_group_degree(lam) -> int:
    lam = normalise(lam)
    prod_h = 1
    for h in hook_lengths(lam):
        prod_h *= h
    return factorial(sum(lam)) // prod_h


def symbolic_valuation(p: UniPoly, q: int, ell: int, e: int) -> int:
    """nu_l(p(q)) from the cyclotomic factorisation of p, for l odd."""
    a = ell_valuation(cyclotomic_polynomial(e)(q), ell)
    fac = factor_into_cyclotomics(p)
    total = 0
    for m, mult in fac.factors:
        if m == e:
            total += a * mult
        elif m % e == 0:
            r = m // e
            while r % ell == 0:
                r //= ell
            if r == 1:
                total += mult
    return total


def unipotent_defect(lam, q: int, ell: int, e: int | None = None) -> int:
    """nu_l(|GL_n(q)|) - nu_l(chi_lam(1)), computed symbolically and checked numerically."""
    if ell == 2:
        raise ValueError("unipotent defects are computed for odd l only")
    e0 = multiplicative_order_e(q, ell)
    if e is not None and e != e0:
        raise ValueError(f"e={e} is not the order of {q} mod {ell} (which is {e0})")
    lam = normalise(lam)
    n = sum(lam)
    deg = unipotent_degree(lam).polynomial
    order = order_polynomial_gl(n)
    d_sym = symbolic_valuation(order, q, ell, e0) - symbolic_valuation(deg, q, ell, e0)
    d_int = ell_valuation(order(q), ell) - ell_valuation(deg(q), ell)
    if d_sym != d_int:
        raise ArithmeticError(f"symbolic defect {d_sym} != integer defect {d_int} for {lam}")
    return d_sym


# ------------------------------------------------------------------- blocks

def unipotent_block_partition(n: int, e: int) -> dict:
    """e-core -> unipotent labels with that core, both in reverse lexicographic order."""
    out = {}
    for lam in partitions_of(n):
        out.setdefault(e_core(lam, e), []).append(lam)
    return dict(sorted(out.items(), reverse=True))


def multipartitions(w: int, e: int) -> list:
    """All e-tuples of partitions with total size w."""
    out = []

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for k in range(total + 1):
            for rest in compositions(total - k, parts - 1):
                yield (k,) + rest

    for comp in compositions(w, e):
        out.extend(product(*(partitions_of(k) for k in comp)))
    return out


@dataclass(frozen=True)
class SeriesCountItem:
    core: tuple
    weight: int
    characters: int
    multipartitions: int

    @property
    def ok(self) -> bool:
        return self.characters == self.multipartitions


def series_count_identity(n: int, e: int) -> list:
    """Per e-core, the number of unipotent characters against the e-multipartitions of the weight."""
    items = []
    for core, members in unipotent_block_partition(n, e).items():
        w = (n - sum(core)) // e
        items.append(SeriesCountItem(core, w, len(members), len(multipartitions(w, e))))
    return items


def block_defects(n: int, q: int, ell: int) -> dict:
    """e-core -> (weight, sorted list of member defects) for the unipotent blocks of GL_n(q)."""
    e = multiplicative_order_e(q, ell)
    out = {}
    for core, members in unipotent_block_partition(n, e).items():
        w = (n - sum(core)) // e
        out[core] = (w, sorted(unipotent_defect(lam, q, ell, e) for lam in members))
    return out
