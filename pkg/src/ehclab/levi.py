"""e-split Levi subgroups of type A groups, chains of them, and orbit counts.

Everything works on the Weyl-group level: an F-stable maximal torus T_w is given by
a Weyl element w, its Phi_e-part has cocharacter space ker Phi_e(w) in Y (x) Q, and a
Levi subgroup containing T_w is given by a parabolic root subsystem.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import prod

from .errors import MaxLenExceeded, TwistedUnsupported
from .exact import UniPoly, cyclotomic_polynomial, euler_phi
from .rootdatum import (FrobeniusAction, PrimeContext, RootDatum, WeylGroup,
                        _identity, _mat_mul, order_polynomial, weyl_group)


# ---------------------------------------------------------------- rational linear algebra

def _rref(rows, ncols):
    """Row-reduced echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows, ncols) -> tuple:
    """Basis of {y in Q^ncols : row . y = 0 for all rows}, in canonical (RREF-derived) form."""
    if not rows:
        return tuple(tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols))
    M, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(M, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)


@dataclass(frozen=True)
class RationalSubspace:
    """Subspace of Q^dim spanned by the given basis vectors."""

    dim_ambient: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        M, _ = _rref(list(self.basis) + [v], self.dim_ambient)
        return len(M) == self.dim

    def annihilated_by(self, functional) -> bool:
        return all(sum(a * b for a, b in zip(functional, v)) == 0 for v in self.basis)


def _poly_of_matrix(poly: UniPoly, M):
    n = len(M)
    out = [[0] * n for _ in range(n)]
    power = _identity(n)
    for c in poly.coeffs:
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * power[i][j]
        power = _mat_mul(power, M)
    return out


def _twisted(w, F: FrobeniusAction | None):
    if F is None or F.untwisted:
        return w
    return _mat_mul(w, F.phi)


def phi_e_eigenspace(w, F: FrobeniusAction | None, e: int) -> RationalSubspace:
    """ker Phi_e(w phi) on Y (x) Q."""
    M = _poly_of_matrix(cyclotomic_polynomial(e), _twisted(w, F))
    return RationalSubspace(len(w), nullspace(M, len(w)))


def roots_vanishing_on(R: RootDatum, V: RationalSubspace) -> frozenset:
    return frozenset(i for i, a in enumerate(R.roots) if V.annihilated_by(a))


def _perp_within(R: RootDatum, V: RationalSubspace, roots) -> RationalSubspace:
    """V intersected with the common kernel of the given roots."""
    if not V.basis:
        return V
    rows = [[sum(a * b for a, b in zip(R.roots[i], v)) for v in V.basis] for i in roots]
    coeffs = nullspace(rows, V.dim) if rows else nullspace([], V.dim)
    basis = [tuple(sum(c[k] * V.basis[k][j] for k in range(V.dim)) for j in range(V.dim_ambient))
             for c in coeffs]
    return RationalSubspace(V.dim_ambient, tuple(basis))


# ---------------------------------------------------------------- Weyl group bookkeeping

class WeylIndex:
    """Index-based Weyl group arithmetic through root permutations."""

    def __init__(self, W: WeylGroup):
        self.W = W
        self.R = W.datum
        self.perms = W.root_perms
        self.of_perm = {p: i for i, p in enumerate(self.perms)}
        self.order = len(self.perms)
        self.identity = W.index[W.identity]
        self.simple = [W.index[s] for s in W.gens]
        self._mul = {}
        self._sub_cache = {}

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._mul.get(key)
        if out is None:
            a, b = self.perms[i], self.perms[j]
            out = self.of_perm[tuple(a[x] for x in b)]
            self._mul[key] = out
        return out

    @cached_property
    def inverses(self) -> list:
        out = [0] * self.order
        for i, p in enumerate(self.perms):
            inv = [0] * len(p)
            for a, b in enumerate(p):
                inv[b] = a
            out[i] = self.of_perm[tuple(inv)]
        return out

    def conj(self, v: int, w: int) -> int:
        """v w v^-1."""
        return self.mul(self.mul(v, w), self.inverses[v])

    def act(self, v: int, roots) -> frozenset:
        p = self.perms[v]
        return frozenset(p[i] for i in roots)

    def reflection_subgroup(self, roots) -> frozenset:
        roots = frozenset(roots)
        if roots not in self._sub_cache:
            self._sub_cache[roots] = frozenset(self.W.subgroup_generated_by_roots(sorted(roots)))
        return self._sub_cache[roots]

    def matrix(self, i: int):
        return self.W.elements[i]


@lru_cache(maxsize=None)
def _weyl_index(type_label: str, n: int) -> WeylIndex:
    return WeylIndex(weyl_group(type_label[:2], n))


def weyl_index_for(R: RootDatum) -> WeylIndex:
    return _weyl_index(R.type_label, R.n)


# ---------------------------------------------------------------- labels in type A

def _root_pairs(R: RootDatum) -> list:
    """(a, b) with the coroot equal to e_a - e_b in ambient coordinates."""
    out = []
    for c in R.coroots:
        amb = [sum(c[j] * R.ambient[j][k] for j in range(R.rank)) for k in range(R.n)]
        out.append((amb.index(1), amb.index(-1)))
    return out


def _coordinate_permutation(R: RootDatum, perm) -> tuple:
    if R.n == 1:
        return (0,)
    pairs = _root_pairs(R)
    image = [None] * R.n
    for r, (a, b) in enumerate(pairs):
        image[a] = pairs[perm[r]][0]
    return tuple(image)


def _blocks(R: RootDatum, roots) -> list:
    parent = list(range(R.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = _root_pairs(R)
    for r in roots:
        a, b = pairs[r]
        parent[find(a)] = find(b)
    groups = {}
    for x in range(R.n):
        groups.setdefault(find(x), []).append(x)
    return sorted(tuple(g) for g in groups.values())


def block_factors(R: RootDatum, roots, perm) -> tuple:
    """Multiset of (m, k): w-orbits of k blocks of size m, i.e. factors GL_m(q^k)."""
    blocks = _blocks(R, roots)
    pi = _coordinate_permutation(R, perm)
    where = {x: i for i, b in enumerate(blocks) for x in b}
    seen, out = set(), []
    for i, b in enumerate(blocks):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            k += 1
            j = where[pi[blocks[j][0]]]
        out.append((len(b), k))
    return tuple(sorted(out, key=lambda t: (-t[1], -t[0])))


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def factor_label(factors, type_label: str = "GL_n") -> str:
    parts = []
    for m, k in factors:
        qk = "q" if k == 1 else "q" + str(k).translate(_SUP)
        parts.append(f"GL{str(m).translate(_SUB)}({qk})")
    body = "×".join(parts)
    if type_label == "SL_n":
        if len(factors) == 1 and factors[0][1] == 1:
            return f"SL{str(factors[0][0]).translate(_SUB)}(q)"
        return f"S({body})"
    return body


def gl_order_poly(m: int) -> UniPoly:
    p = UniPoly.monomial(m * (m - 1) // 2)
    for i in range(1, m + 1):
        p = p * (UniPoly.monomial(i) - 1)
    return p


def factors_order_poly(factors, type_label: str) -> UniPoly:
    p = UniPoly.constant(1)
    for m, k in factors:
        p = p * gl_order_poly(m).compose_power(k)
    if type_label == "SL_n":
        p = p // (UniPoly.x() - 1)
    return p


# ---------------------------------------------------------------- e-split Levis

@dataclass(frozen=True)
class EsplitLevi:
    """G^F-class of an e-split Levi subgroup, with a representing Weyl element."""

    e: int
    w: int                      # index of w in the Weyl group
    roots: frozenset            # root subsystem Phi_L (indices into R.roots)
    factors: tuple              # ((m, k), ...) : L^F = prod GL_m(q^k) (intersected with SL)
    centre_phi_e: UniPoly       # Phi_e-part of the order polynomial of Z°(L)
    label: str
    relative_weyl_order: int    # |N_G^F(L) / L^F|
    order_poly: UniPoly         # |L^F| as polynomial in q
    coset: frozenset = field(compare=False, repr=False, default=frozenset())

    def order(self, q: int) -> int:
        return self.order_poly(q)

    @property
    def rank_of_subsystem(self) -> int:
        return len(self.roots) // 2


class LeviContext:
    """Cached per-(type, n) data for Levi computations."""

    def __init__(self, R: RootDatum, F: FrobeniusAction):
        if not F.untwisted:
            raise TwistedUnsupported("Levi enumeration implemented for untwisted Frobenius")
        self.R, self.F = R, F
        self.Wi = weyl_index_for(R)
        self._eig = {}

    def eigenspace(self, w: int, e: int) -> RationalSubspace:
        key = (w, e)
        if key not in self._eig:
            self._eig[key] = phi_e_eigenspace(self.Wi.matrix(w), self.F, e)
        return self._eig[key]

    def coset(self, w: int, roots) -> frozenset:
        return frozenset(self.Wi.mul(w, x) for x in self.Wi.reflection_subgroup(roots))

    def relative_weyl_order(self, w: int, roots, extra=()) -> int:
        """#{v : v fixes roots and every set in extra, v w v^-1 in w W_L} / |W_L|."""
        Wi = self.Wi
        WL = Wi.reflection_subgroup(roots)
        winv = Wi.inverses[w]
        count = 0
        for v in range(Wi.order):
            if Wi.act(v, roots) != roots or any(Wi.act(v, s) != s for s in extra):
                continue
            if Wi.mul(winv, Wi.conj(v, w)) in WL:
                count += 1
        assert count % len(WL) == 0
        return count // len(WL)

    def make_levi(self, roots, w: int, e: int) -> EsplitLevi:
        R = self.R
        roots = frozenset(roots)
        facs = block_factors(R, roots, self.Wi.perms[w])
        V = _perp_within(R, self.eigenspace(w, e), roots)
        phi = euler_phi(e)
        assert V.dim % phi == 0
        return EsplitLevi(
            e=e, w=w, roots=roots, factors=facs,
            centre_phi_e=cyclotomic_polynomial(e) ** (V.dim // phi),
            label=factor_label(facs, R.type_label),
            relative_weyl_order=self.relative_weyl_order(w, roots),
            order_poly=factors_order_poly(facs, R.type_label),
            coset=self.coset(w, roots),
        )

    def orbit_key(self, subsystems: tuple, coset: frozenset):
        """Canonical representative of the W-orbit of (subsystems, coset) under conjugation."""
        Wi = self.Wi
        start = (tuple(subsystems), coset)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for subs, cos in frontier:
                for s in Wi.simple:
                    img = (tuple(Wi.act(s, x) for x in subs),
                           frozenset(Wi.conj(s, c) for c in cos))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return min((tuple(tuple(sorted(x)) for x in subs), tuple(sorted(cos))) for subs, cos in seen)


@lru_cache(maxsize=None)
def levi_context(R: RootDatum, F: FrobeniusAction) -> LeviContext:
    return LeviContext(R, F)


def enumerate_e_split_levis(R: RootDatum, F: FrobeniusAction, e: int) -> list:
    """e-split Levi subgroups up to G^F-conjugacy, sorted with G first."""
    ctx = levi_context(R, F)
    Wi = ctx.Wi
    classes = {}
    seen_pairs = {}
    for w in range(Wi.order):
        V = ctx.eigenspace(w, e)
        roots = roots_vanishing_on(R, V)
        coset = ctx.coset(w, roots)
        pair = (roots, coset)
        if pair in seen_pairs:
            continue
        key = ctx.orbit_key((roots,), coset)
        seen_pairs[pair] = key
        if key not in classes:
            classes[key] = ctx.make_levi(roots, w, e)
    out = list(classes.values())
    out.sort(key=lambda L: (-len(L.roots), L.label))
    return out


def rederive(R: RootDatum, F: FrobeniusAction, L: EsplitLevi) -> bool:
    """L = C_G(Z°(L)_{Phi_e}): the subsystem is exactly the roots vanishing on the Phi_e-part of the centre."""
    ctx = levi_context(R, F)
    S = _perp_within(R, ctx.eigenspace(L.w, L.e), L.roots)
    return roots_vanishing_on(R, S) == L.roots


def is_E_split(R: RootDatum, F: FrobeniusAction, L: EsplitLevi, E) -> bool:
    """Whether L = C_G(Z°(L)_{Phi_E}) for the finite set E."""
    ctx = levi_context(R, F)
    w = ctx.Wi.matrix(L.w)
    P = UniPoly.constant(1)
    for e in sorted(set(E)):
        P = P * cyclotomic_polynomial(e)
    M = _poly_of_matrix(P, _twisted(w, F))
    rows = [list(r) for r in M] + [list(R.roots[i]) for i in L.roots]
    S = RationalSubspace(R.rank, nullspace(rows, R.rank))
    return roots_vanishing_on(R, S) == L.roots


def E_q_ell(R: RootDatum, pctx: PrimeContext) -> tuple:
    """{e ell^m} truncated to the values that can divide a torus order polynomial."""
    out, m = [], 0
    while euler_phi(pctx.e * pctx.ell ** m) <= R.rank:
        out.append(pctx.e * pctx.ell ** m)
        m += 1
    return tuple(out)


def e_ql_split(R: RootDatum, F: FrobeniusAction, L: EsplitLevi, pctx: PrimeContext) -> bool:
    return is_E_split(R, F, L, E_q_ell(R, pctx))


def gl_closed_form_levis(n: int, e: int) -> list:
    """Labels GL_{n0}(q) x prod GL_{m_i}(q^e) with n0 + e * sum(m_i) = n, deduplicated and sorted."""
    def partitions(k, largest):
        if k == 0:
            yield ()
            return
        for m in range(min(k, largest), 0, -1):
            for rest in partitions(k - m, m):
                yield (m,) + rest

    labels = set()
    for total in range(n // e + 1):
        n0 = n - e * total
        for parts in partitions(total, total):
            facs = ([(n0, 1)] if n0 else []) + [(m, e) for m in parts]
            labels.add(tuple(sorted(facs, key=lambda t: (-t[1], -t[0]))))
    return sorted(factor_label(f) for f in labels)


def gl_closed_form_pairs(n: int, e: int) -> list:
    """The raw (n0, multiset) pairs behind gl_closed_form_levis."""
    out = []

    def partitions(k, largest):
        if k == 0:
            yield ()
            return
        for m in range(min(k, largest), 0, -1):
            for rest in partitions(k - m, m):
                yield (m,) + rest

    for total in range(n // e + 1):
        for parts in partitions(total, total):
            out.append((n - e * total, parts))
    return out


# ---------------------------------------------------------------- chains

@dataclass(frozen=True)
class LeviChain:
    """sigma = (G = L_0 > L_1 > ... > L_n) up to G^F-conjugacy."""

    terms: tuple                # EsplitLevi for L_0 .. L_n
    witnesses: tuple            # (i, strict containment of subsystems L_{i+1} < L_i)
    stabiliser_order: int       # |G^F_sigma|

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    @property
    def final(self) -> EsplitLevi:
        return self.terms[-1]

    @property
    def labels(self) -> tuple:
        return tuple(t.label for t in self.terms)

    def __str__(self):
        return " > ".join(self.labels)


@dataclass(frozen=True)
class OrbitStats:
    group_order: int
    n_orbits: int
    stabiliser_orders: tuple

    @property
    def total_chains(self) -> int:
        return sum(self.group_order // s for s in self.stabiliser_orders)


@dataclass
class ChainEnumeration:
    chains: list
    stats: OrbitStats

    def positive(self) -> list:
        return [c for c in self.chains if c.length > 0]

    def alternating_sum(self, f, include_trivial: bool = True) -> int:
        return sum((-1) ** c.length * f(c) for c in self.chains if include_trivial or c.length > 0)

    def __iter__(self):
        return iter((self.chains, self.stats))


@lru_cache(maxsize=None)
def parabolic_subsystems(R: RootDatum) -> tuple:
    """All W-conjugates of standard parabolic subsystems Phi_J."""
    Wi = weyl_index_for(R)
    out = set()
    for k in range(len(R.simple) + 1):
        for J in combinations(R.simple, k):
            # roots in the span of J are those vanishing on the common kernel of J
            V = RationalSubspace(R.rank, nullspace([R.roots[j] for j in J], R.rank))
            base = roots_vanishing_on(R, V) if J else frozenset()
            for v in range(Wi.order):
                out.add(Wi.act(v, base))
    return tuple(sorted(out, key=lambda s: (-len(s), sorted(s))))


def e_split_levis_containing(R: RootDatum, F: FrobeniusAction, w: int, e: int) -> list:
    """Subsystems of the e-split Levis containing T_w (each is w-stable)."""
    ctx = levi_context(R, F)
    V = ctx.eigenspace(w, e)
    out = []
    for P in parabolic_subsystems(R):
        if ctx.Wi.act(w, P) != P:
            continue
        if roots_vanishing_on(R, _perp_within(R, V, P)) == P:
            out.append(P)
    return out


def enumerate_chains(R: RootDatum, F: FrobeniusAction, e: int, max_len: int = 8) -> ChainEnumeration:
    """All descending chains of e-split Levis starting at G, up to G^F-conjugacy."""
    ctx = levi_context(R, F)
    Wi = ctx.Wi
    q = F.q
    G_order = order_polynomial(R, F)(q)
    all_roots = frozenset(range(len(R.roots)))
    found = {}
    for w in range(Wi.order):
        cands = e_split_levis_containing(R, F, w, e)
        below = {P: [Q for Q in cands if Q < P] for P in cands}

        def extend(chain):
            yield chain
            if len(chain) - 1 >= max_len and below[chain[-1]]:
                raise MaxLenExceeded(f"chain depth exceeds max_len={max_len}")
            for Q in below[chain[-1]]:
                yield from extend(chain + (Q,))

        for chain in extend((all_roots,)):
            coset = ctx.coset(w, chain[-1])
            key = ctx.orbit_key(chain[1:], coset)
            if key in found:
                continue
            terms = tuple(ctx.make_levi(P, w, e) for P in chain)
            witnesses = tuple((i, chain[i + 1] < chain[i]) for i in range(len(chain) - 1))
            rel = ctx.relative_weyl_order(w, chain[-1], extra=chain[1:-1])
            stab = terms[-1].order(q) * rel
            found[key] = LeviChain(terms, witnesses, stab)
    chains = sorted(found.values(), key=lambda c: (c.length, c.labels, -c.stabiliser_order))
    stats = OrbitStats(G_order, len(chains), tuple(c.stabiliser_order for c in chains))
    return ChainEnumeration(chains, stats)
