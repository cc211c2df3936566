"""Brute-force finite groups: matrix groups over F_q, subgroups and conjugacy classes."""
from __future__ import annotations

from functools import cached_property
from itertools import product
from math import gcd

from .errors import TooLarge, UnsupportedType
from .fields import MatrixOps, gf

MAX_ORDER = 20000


class ConjClassSet:
    """Conjugacy classes with representatives, sizes, element-to-class map and power maps."""

    def __init__(self, group: "ConcreteGroup"):
        self.group = group
        G = group
        n = G.order
        class_of = [-1] * n
        raw = []
        gens = G.generators
        for i, g in enumerate(G.elements):
            if class_of[i] >= 0:
                continue
            orbit = [g]
            class_of[i] = len(raw)
            stack = [g]
            while stack:
                x = stack.pop()
                for s in gens:
                    y = G.mul(G.mul(s, x), G.inv(s))
                    j = G.index[y]
                    if class_of[j] < 0:
                        class_of[j] = len(raw)
                        orbit.append(y)
                        stack.append(y)
            raw.append(orbit)
        # deterministic order: identity first, then by element order, size, representative
        keyed = []
        for c, orbit in enumerate(raw):
            rep = min(orbit)
            keyed.append(((G.element_order(rep), len(orbit), rep), c, rep, orbit))
        keyed.sort(key=lambda t: (t[2] != G.identity, t[0]))
        remap = {}
        self.reps, self.sizes, self.members, self.orders = [], [], [], []
        for new, (key, old, rep, orbit) in enumerate(keyed):
            remap[old] = new
            self.reps.append(rep)
            self.sizes.append(len(orbit))
            self.members.append(sorted(orbit))
            self.orders.append(key[0])
        self.class_of = [remap[c] for c in class_of]
        self._power_cache = {}

    def __len__(self):
        return len(self.reps)

    def class_of_element(self, g) -> int:
        return self.class_of[self.group.index[g]]

    def power_map(self, k: int, s: int) -> int:
        key = (k, s % self.orders[k])
        if key not in self._power_cache:
            self._power_cache[key] = self.class_of_element(self.group.power(self.reps[k], key[1]))
        return self._power_cache[key]

    @cached_property
    def inverse_class(self) -> list:
        return [self.class_of_element(self.group.inv(r)) for r in self.reps]

    def centraliser_order(self, k: int) -> int:
        return self.group.order // self.sizes[k]


class ConcreteGroup:
    """Finite group given by an explicit element list and multiplication."""

    def __init__(self, elements, ops, name: str = "", data: dict | None = None):
        self.elements = sorted(set(elements))
        if len(self.elements) > MAX_ORDER:
            raise TooLarge(len(self.elements), MAX_ORDER)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.ops = ops
        self.name = name
        # descriptive entries only; cached computations are per group
        self.data = {k: v for k, v in (data or {}).items() if isinstance(k, str) and not k.startswith("_")}
        self.identity = ops.identity
        if self.identity not in self.index:
            raise ValueError("element list does not contain the identity")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        return self.ops.mul(a, b)

    def inv(self, a):
        return self.ops.inv(a)

    def conj(self, x, g):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, g, s: int):
        out = self.identity
        base = g
        while s:
            if s & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            s >>= 1
        return out

    def __contains__(self, g):
        return g in self.index

    def element_order(self, g) -> int:
        cur, n = g, 1
        while cur != self.identity:
            cur = self.mul(cur, g)
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        e = 1
        for r in self.classes.orders:
            e = e * r // gcd(e, r)
        return e

    def closure(self, gens) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    @cached_property
    def generators(self) -> list:
        by_order = sorted(self.elements, key=lambda g: (-self.element_order(g), g)) \
            if self.order <= 2000 else self.elements
        gens = []
        span = {self.identity}
        for g in by_order:
            if len(span) == self.order:
                break
            if g not in span:
                gens.append(g)
                span = self.closure(gens)
        return gens

    @cached_property
    def classes(self) -> ConjClassSet:
        return ConjClassSet(self)

    def subgroup(self, gens, name: str = "") -> "ConcreteGroup":
        return ConcreteGroup(self.closure(gens), self.ops, name, self.data)

    def subgroup_from(self, elements, name: str = "") -> "ConcreteGroup":
        return ConcreteGroup(elements, self.ops, name, self.data)

    def centraliser(self, subset, name: str = "") -> "ConcreteGroup":
        subset = list(subset)
        els = [g for g in self.elements
               if all(self.mul(g, x) == self.mul(x, g) for x in subset)]
        return self.subgroup_from(els, name)

    def normaliser(self, sub, name: str = "") -> "ConcreteGroup":
        members = set(sub.elements if isinstance(sub, ConcreteGroup) else sub)
        gens = sub.generators if isinstance(sub, ConcreteGroup) else list(members)
        els = [g for g in self.elements if all(self.conj(x, g) in members for x in gens)]
        return self.subgroup_from(els, name)

    def conjugate_set(self, subset, g) -> frozenset:
        return frozenset(self.conj(x, g) for x in subset)

    @cached_property
    def centre(self) -> "ConcreteGroup":
        return self.centraliser(self.generators, "Z")

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def is_subgroup_of(self, other: "ConcreteGroup") -> bool:
        return all(g in other.index for g in self.elements)

    def __repr__(self):
        return f"ConcreteGroup({self.name or '?'}, order={self.order})"


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def materialise(gtype: str, n: int, q: int) -> ConcreteGroup:
    """GL_n(q) or SL_n(q) as an explicit matrix group."""
    gtype = gtype.upper()
    if gtype not in ("GL", "SL"):
        raise UnsupportedType(f"unsupported group type {gtype}")
    order = gl_order(n, q) // (q - 1 if gtype == "SL" else 1)
    if order > MAX_ORDER:
        raise TooLarge(order, MAX_ORDER)
    F = gf(q)
    ops = MatrixOps(F, n)
    els = []
    for A in product(range(q), repeat=n * n):
        d = ops.det(A)
        if (gtype == "GL" and d) or (gtype == "SL" and d == 1):
            els.append(A)
    return ConcreteGroup(els, ops, f"{gtype}{n}({q})", {"type": gtype, "n": n, "q": q})


def permutation_group(perms, name: str = "") -> ConcreteGroup:
    """Group generated by permutations given as tuples (images of 0..m-1)."""
    m = len(perms[0])

    class _Ops:
        identity = tuple(range(m))

        @staticmethod
        def mul(a, b):
            # (a*b)(i) = a(b(i))
            return tuple(a[i] for i in b)

        @staticmethod
        def inv(a):
            out = [0] * m
            for i, x in enumerate(a):
                out[x] = i
            return tuple(out)

    tmp = ConcreteGroup([_Ops.identity], _Ops, name)
    return ConcreteGroup(tmp.closure(perms), _Ops, name)


def cyclic_group(n: int) -> ConcreteGroup:
    return permutation_group([tuple((i + 1) % n for i in range(n))], f"Z{n}")
