"""l-elementary abelian chains, good/bad classification and the alternating chain sums.

Chains start at O_l(G) and consist of subgroups E with E / O_l(G) elementary abelian.
Good subgroups are those with E = Omega_1(O_l(Z°(C°_G(E))^F)); the connected centraliser is
computed from eigenvector data in a reductive context (GL_2 / SL_2 only).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .blocks import UndefinedInduction, block_data, brauer_induced_block
from .chartable import character_table
from .errors import CentraliserNotLevi, HypothesisViolated, MaxLenExceeded
from .exact import ell_valuation, reduce_dense
from .groups import ConcreteGroup
from .instance import COX, SPLIT, RankOneInstance, is_scalar
from .rootdatum import build_group, classify_prime, multiplicative_order_e


def o_ell(G: ConcreteGroup, ell: int) -> frozenset:
    """Largest normal l-subgroup: generated by the l-elements whose class generates an l-group."""
    cl = G.classes
    found = {G.identity}
    for k, rep in enumerate(cl.reps):
        o = cl.orders[k]
        if o == 1 or o != ell ** ell_valuation(o, ell):
            continue
        span = G.closure(cl.members[k])
        if len(span) == ell ** ell_valuation(len(span), ell):
            found |= span
    return frozenset(G.closure(found))


def omega1(G: ConcreteGroup, elements, ell: int) -> frozenset:
    """Omega_1 of the l-part of an abelian group given by its elements."""
    return frozenset(x for x in elements if G.power(x, ell) == G.identity)


def _elementary_over(G: ConcreteGroup, base: frozenset, ell: int) -> list:
    """All subgroups E >= base with E/base elementary abelian (base normal in G)."""
    cands = [x for x in G.elements if x not in base and G.power(x, ell) in base]
    found = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for E in frontier:
            for x in cands:
                if x in E:
                    continue
                if any(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))) not in base for y in E):
                    continue
                F = frozenset(G.closure(list(E) + [x]))
                if F not in found and all(G.power(z, ell) in base for z in F):
                    found.add(F)
                    nxt.append(F)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@dataclass
class EllChain:
    """E_0 < E_1 < ... < E_n, stored as frozensets of group elements."""

    terms: tuple
    orbit_size: int
    group: ConcreteGroup = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    @cached_property
    def stabiliser(self) -> ConcreteGroup:
        return chain_stabiliser(self.group, self.terms)

    def orders(self) -> tuple:
        return tuple(len(t) for t in self.terms)

    def __str__(self):
        return " < ".join(str(len(t)) for t in self.terms)


def chain_stabiliser(G: ConcreteGroup, terms) -> ConcreteGroup:
    gens = [G.subgroup_from(t).generators if len(t) > 1 else [] for t in terms]
    els = [g for g in G.elements
           if all(G.conj(x, g) in t for t, gs in zip(terms, gens) for x in gs)]
    return G.subgroup_from(els, "G_chain")


def _conj_chain(G, terms, g):
    return tuple(G.conjugate_set(t, g) for t in terms)


def enumerate_ell_elementary_chains(G: ConcreteGroup, ell: int, start: frozenset | None = None,
                                    max_len: int = 8) -> list:
    """Chains from `start` (default O_l(G)) of elementary abelian extensions, up to G-conjugacy."""
    base = o_ell(G, ell) if start is None else frozenset(start)
    subs = _elementary_over(G, base, ell)
    above = {E: [F for F in subs if len(F) > len(E) and E < F] for E in subs}
    chains = []

    def grow(ch):
        chains.append(tuple(ch))
        if len(ch) - 1 > max_len:
            raise MaxLenExceeded(f"chain longer than {max_len}")
        for F in above[ch[-1]]:
            grow(ch + [F])
    grow([base])
    # orbits under conjugation by generators
    index = {c: i for i, c in enumerate(chains)}
    orbit_of = [-1] * len(chains)
    reps = []
    for i, c in enumerate(chains):
        if orbit_of[i] >= 0:
            continue
        orbit_of[i] = len(reps)
        members = [c]
        stack = [c]
        while stack:
            x = stack.pop()
            for s in G.generators:
                y = _conj_chain(G, x, s)
                j = index[y]
                if orbit_of[j] < 0:
                    orbit_of[j] = len(reps)
                    members.append(y)
                    stack.append(y)
        rep = min(members, key=_chain_key)
        reps.append(EllChain(rep, len(members), G))
    reps.sort(key=lambda ch: (ch.length, ch.orders(), _chain_key(ch.terms)))
    return reps


def _chain_key(terms):
    return tuple(tuple(sorted(t)) for t in terms)


def canonical_chain(G: ConcreteGroup, terms) -> tuple:
    """Least chain in the G-orbit of `terms` (exhaustive conjugation)."""
    return min((_conj_chain(G, terms, g) for g in G.elements), key=_chain_key)


# -------------------------------------------------------- reductive context


class RankOneContext:
    """Connected centralisers and connected centres inside GL_2(q) / SL_2(q)."""

    def __init__(self, inst: RankOneInstance):
        self.inst = inst
        self.G = inst.G
        self.ops = self.G.ops
        self.F = self.ops.F

    @cached_property
    def all_elements(self) -> frozenset:
        return frozenset(self.G.elements)

    @cached_property
    def connected_centre_G(self) -> frozenset:
        """Z°(G)^F: the scalars for GL_2, trivial for SL_2."""
        if self.inst.gtype == "SL":
            return frozenset([self.G.identity])
        return frozenset(x for x in self.G.elements if is_scalar(x))

    def _torus_of(self, x) -> frozenset:
        """C°_G(x)^F for a noncentral semisimple x, from its eigenvectors or from F_q[x]."""
        F, ops = self.F, self.ops
        q = F.q
        a, b, c, d = x
        tr = F.add(a, d)
        det = ops.det(x)
        roots = [r for r in range(1, q) if F.add(F.sub(F.mul(r, r), F.mul(tr, r)), det) == 0]
        out = set()
        if len(roots) == 2:
            vecs = []
            for lam in roots:
                if b or F.sub(a, lam):
                    vecs.append((b, F.sub(lam, a)))
                else:
                    vecs.append((F.sub(d, lam), F.neg(c)))
            P = (vecs[0][0], vecs[1][0], vecs[0][1], vecs[1][1])
            Pi = ops.inv(P)
            for s in range(1, q):
                for t in range(1, q):
                    out.add(ops.mul(ops.mul(P, ops.diag((s, t))), Pi))
        elif len(roots) == 0:
            for s in range(q):
                for t in range(q):
                    if s == 0 and t == 0:
                        continue
                    out.add(ops.add(ops.scalar(s), ops.scale(t, x)))
        else:
            raise CentraliserNotLevi("element with a repeated eigenvalue is not semisimple")
        if self.inst.gtype == "SL":
            out = {y for y in out if ops.det(y) == 1}
        return frozenset(out)

    @cached_property
    def levi_orders(self) -> set:
        return {self.G.order, self.inst.tori[SPLIT].order, self.inst.tori[COX].order}

    def connected_centraliser(self, E) -> frozenset:
        E = list(E)
        nonc = [x for x in E if not is_scalar(x)]
        if not nonc:
            return self.all_elements
        C = self._torus_of(nonc[0])
        if not all(y in C for y in E):
            raise CentraliserNotLevi("subgroup is not contained in a maximal torus")
        if len(C) not in self.levi_orders:
            raise CentraliserNotLevi(f"connected centraliser of order {len(C)} is not a Levi subgroup")
        return C

    def connected_centre(self, C: frozenset) -> frozenset:
        """Z°(C)^F for C = G or a maximal torus."""
        if len(C) == self.G.order:
            return self.connected_centre_G
        return C

    def good_closure(self, E, ell: int) -> frozenset:
        """Omega_1(O_l(Z°(C°_G(E))^F))."""
        return omega1(self.G, self.connected_centre(self.connected_centraliser(E)), ell)

    def is_good(self, E, ell: int) -> bool:
        return self.good_closure(E, ell) == frozenset(E)

    def levi_elements(self, levi: str) -> frozenset:
        if levi == "G":
            return self.all_elements
        return frozenset(self.inst.tori[levi].group.elements)


def classify_good_bad(chain: EllChain, ctx: RankOneContext, ell: int) -> bool:
    """True iff every term of the chain is good."""
    return all(ctx.is_good(E, ell) for E in chain.terms)


# ----------------------------------------------------------- involution


@dataclass
class InvolutionReport:
    pairing: dict            # chain terms -> partner chain terms (both orbit representatives)
    fixed_points: list
    involutive: bool
    length_ok: bool
    stabilisers_equal: bool

    @property
    def ok(self) -> bool:
        return not self.fixed_points and self.involutive and self.length_ok and self.stabilisers_equal


def _partner(terms, ctx: RankOneContext, ell: int) -> tuple:
    D = [ctx.good_closure(E, ell) for E in terms]
    bad = [i for i, (E, Di) in enumerate(zip(terms, D)) if E != Di]
    if not bad:
        return tuple(terms)
    j = max(bad)
    n = len(terms) - 1
    if j == n:
        return tuple(terms) + (D[n],)
    if D[j] == terms[j + 1]:
        return tuple(terms[:j + 1]) + tuple(terms[j + 2:])
    return tuple(terms[:j + 1]) + (D[j],) + tuple(terms[j + 1:])


def bad_chain_involution(chains, ctx: RankOneContext, ell: int) -> InvolutionReport:
    """Add or remove D_j at the largest bad index j; checked on every bad orbit representative."""
    G = ctx.G
    bad = [c for c in chains if not classify_good_bad(c, ctx, ell)]
    rep_of = {}
    for c in chains:
        rep_of[c.terms] = c
    pairing, fixed = {}, []
    involutive = length_ok = stab_ok = True
    for c in bad:
        img = _partner(c.terms, ctx, ell)
        if img == c.terms:
            fixed.append(c.terms)
            continue
        for a, b in zip(img, img[1:]):
            if not a < b:
                raise AssertionError("partner chain is not strictly increasing")
        if _partner(img, ctx, ell) != c.terms:
            involutive = False
        if abs(len(img) - len(c.terms)) != 1:
            length_ok = False
        if set(chain_stabiliser(G, img).elements) != set(c.stabiliser.elements):
            stab_ok = False
        can = canonical_chain(G, img)
        if can not in rep_of or classify_good_bad(rep_of[can], ctx, ell):
            involutive = False
        pairing[c.terms] = can
    # on orbit representatives the pairing must also be an involution
    for a, b in pairing.items():
        if pairing.get(b) != a:
            involutive = False
    return InvolutionReport(pairing, fixed, involutive, length_ok, stab_ok)


# ---------------------------------------------------- Levi chains <-> chains


@dataclass
class BijectionItem:
    levi_chain: tuple        # ("G",) or ("G", kind)
    ell_chain: tuple         # frozensets
    inverse_ok: bool
    good: bool
    stabilisers_equal: bool


def chain_comparison_hypotheses(inst: RankOneInstance, ell: int, e: int) -> list:
    """Failed preconditions for the chain comparison (empty list if all hold)."""
    R, F, _ = build_group(inst.gtype, 2, inst.q)
    pc = classify_prime(R, F, ell)
    failed = []
    if not pc.large:
        failed.append("ell is not large")
    elif pc.e0 != e:
        failed.append(f"ell is not adapted: e0 = {pc.e0}, e = {e}")
    if len(o_ell(inst.G, ell)) != 1:
        failed.append("O_ell(G^F) != 1")
    z_dual = inst.q - 1 if inst.gtype == "GL" else 1
    if z_dual % ell == 0:
        failed.append("Z(G*)^F has nontrivial ell-part")
    return failed


def levi_chains(inst: RankOneInstance, e: int) -> list:
    """e-split Levi chains of G up to conjugacy, as tuples of Levi names."""
    return [("G",)] + [("G", k) for k in inst.proper_levis(e)]


def levi_chain_stabiliser(inst: RankOneInstance, chain) -> ConcreteGroup:
    if len(chain) == 1:
        return inst.G
    return inst.tori[chain[-1]].normaliser


def chain_levi_bijection(inst: RankOneInstance, ell: int, e: int, check: bool = True) -> list:
    """sigma = (L_i) -> (Omega_1(O_l(Z°(L_i)^F))) and back through C°; raises HypothesisViolated."""
    if check:
        failed = chain_comparison_hypotheses(inst, ell, e)
        if failed:
            raise HypothesisViolated(failed)
    ctx = RankOneContext(inst)
    G = inst.G
    out = []
    for sigma in levi_chains(inst, e):
        levis = [ctx.levi_elements(L) for L in sigma]
        terms = tuple(omega1(G, ctx.connected_centre(L), ell) for L in levis)
        back = tuple(ctx.connected_centraliser(E) for E in terms)
        inverse_ok = back == tuple(levis) and all(a < b for a, b in zip(terms, terms[1:]))
        good = all(ctx.is_good(E, ell) for E in terms)
        st_e = set(chain_stabiliser(G, terms).elements)
        st_l = set(levi_chain_stabiliser(inst, sigma).elements)
        out.append(BijectionItem(sigma, terms, inverse_ok, good, st_e == st_l))
    return out


# ------------------------------------------------------------- chain sums


class StabiliserCounts:
    """k^d(B_H) = #{theta in Irr(H) : d(theta) = d, bl(theta)^G = B} with cached induction."""

    def __init__(self, G: ConcreteGroup, ell: int):
        self.G = G
        self.ell = ell
        self._cache = {}

    def induced(self, H: ConcreteGroup) -> list:
        """(defect, induced block index or None) for every character of H."""
        key = frozenset(H.elements)
        if key in self._cache:
            return self._cache[key]
        hd = block_data(H, self.ell)
        ind = {}
        for b in hd.blocks:
            B = brauer_induced_block(H, b, self.G, self.ell, hd)
            ind[b.index] = None if isinstance(B, UndefinedInduction) else B.index
        out = [(hd.defect(i), ind[hd.block_of[i].index]) for i in range(len(hd.table))]
        self._cache[key] = out
        return out

    def k(self, H: ConcreteGroup, B, d: int) -> int:
        return sum(1 for dd, b in self.induced(H) if dd == d and b == B.index)

    def undefined(self, H: ConcreteGroup) -> int:
        return sum(1 for _, b in self.induced(H) if b is None)


def knorr_robinson_sum(chains, counts: StabiliserCounts, B, d: int, only_good=None) -> int:
    """sum over chain classes of (-1)^|chain| k^d(B_chain); optionally restricted by a predicate."""
    total = 0
    for c in chains:
        if only_good is not None and not only_good(c):
            continue
        total += (-1) ** c.length * counts.k(c.stabiliser, B, d)
    return total


# ---------------------------------------------------- structural checks


def centraliser_connected_check(inst: RankOneInstance, ell: int) -> list:
    """Elementary abelian l-subgroups Y with C_G(Y)^F != C°_G(Y)^F (expected empty)."""
    G = inst.G
    ctx = RankOneContext(inst)
    bad = []
    for Y in _elementary_over(G, frozenset([G.identity]), ell):
        concrete = frozenset(G.centraliser(Y).elements)
        if concrete != ctx.connected_centraliser(Y):
            bad.append(Y)
    return bad


def levi_from_omega1_check(inst: RankOneInstance, ell: int, e: int) -> list:
    """e-split L with L^F != C°_G(Omega_1(Z°(L)^F_l))^F (expected empty for large ell)."""
    ctx = RankOneContext(inst)
    bad = []
    for L in inst.levis(e):
        Lset = ctx.levi_elements(L)
        X = omega1(inst.G, ctx.connected_centre(Lset), ell)
        if ctx.connected_centraliser(X) != Lset:
            bad.append(L)
    return bad


@dataclass
class RegularityItem:
    chain: tuple
    block: int
    covered: tuple          # indices of covered blocks of L
    single_orbit: bool
    induces_back: bool


def covered_blocks(H: ConcreteGroup, K: ConcreteGroup, ell: int) -> dict:
    """For H <= K: K-block index -> set of H-block indices covered (via restriction)."""
    kt, ht = character_table(K), character_table(H)
    kd, hd = block_data(K, ell), block_data(H, ell)
    n = kt.conductor
    f = n // ht.conductor
    hcl, kcl = H.classes, K.classes
    pos = [kcl.class_of_element(r) for r in hcl.reps]
    out = {b.index: set() for b in kd.blocks}
    for i in range(len(kt)):
        for j in range(len(ht)):
            acc = [0] * n
            for k in range(len(hcl)):
                for e1, m1 in kt.rows[i][pos[k]]:
                    for e2, m2 in ht.rows[j][k]:
                        acc[(e1 - e2 * f) % n] += hcl.sizes[k] * m1 * m2
            red = reduce_dense(n, acc)
            if red[0]:
                out[kd.block_of[i].index].add(hd.block_of[j].index)
    return out


def stabiliser_blocks_regular(inst: RankOneInstance, ell: int, e: int) -> list:
    """For every Levi chain with final term L: each block of G_sigma covers one orbit of
    L-blocks, and every covered block induces to it."""
    items = []
    for sigma in levi_chains(inst, e):
        H = levi_chain_stabiliser(inst, sigma)
        if len(sigma) == 1:
            L = inst.G
        else:
            L = inst.tori[sigma[-1]].group
        cov = covered_blocks(L, H, ell)
        ld = block_data(L, ell)
        for bidx, lset in sorted(cov.items()):
            orbit_ok = True
            if len(sigma) > 1:
                T = inst.tori[sigma[-1]]
                # N/T acts on Irr(T) through w; covered blocks form one orbit
                some = min(lset)
                th = next(t for t in T.thetas if ld.block_of[T.theta_row[t]].index == some)
                orbit = {some, ld.block_of[T.theta_row[T.w(th)]].index}
                orbit_ok = orbit == lset
            else:
                orbit_ok = len(lset) == 1
            back = True
            for c in lset:
                B = brauer_induced_block(L, ld.blocks[c], H, ell, ld)
                if isinstance(B, UndefinedInduction) or B.index != bidx:
                    back = False
            items.append(RegularityItem(sigma, bidx, tuple(sorted(lset)), orbit_ok, back))
    return items


def cuspidal_defect_zero_check(inst: RankOneInstance, ell: int) -> tuple:
    """(hypotheses hold, list of e-cuspidal characters of G with positive defect)."""
    R, F, _ = build_group(inst.gtype, 2, inst.q)
    pc = classify_prime(R, F, ell)
    e = multiplicative_order_e(inst.q, ell)
    z_dual = inst.q - 1 if inst.gtype == "GL" else 1
    hyp = pc.large and pc.e0 == e and z_dual % ell != 0
    bd = inst.block_data(ell)
    bad = [i for i in range(len(inst.characters))
           if inst.e_cuspidal_test(i, e) and bd.defect(inst.match.row_of[i]) > 0]
    return hyp, bad
