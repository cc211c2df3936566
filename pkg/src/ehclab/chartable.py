"""Character tables by the class-algebra (Burnside/Dixon) method and exact class-function tools.

Class functions with values in Z[zeta_N] are handled as root sums: one tuple
of (exponent mod N, multiplicity) pairs per conjugacy class.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property
from math import isqrt

import sympy

from .errors import LiftFailure
from .exact import CyclotomicNumber, euler_phi, reduce_dense
from .groups import ConcreteGroup

# ----------------------------------------------------------- linear algebra mod p


def _rref(rows, p):
    """Row-reduced echelon form of a list of vectors mod p; returns (rows, pivots)."""
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def _nullspace(A, p):
    """Basis of {v : A v = 0} for a square or rectangular matrix A (list of rows)."""
    ncols = len(A[0])
    R, pivots = _rref(A, p) if A else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def _charpoly(A, p):
    """Characteristic polynomial of A mod p (lowest degree first) via Hessenberg reduction."""
    n = len(A)
    H = [row[:] for row in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] % p), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if u:
                H[i] = [(x - u * y) % p for x, y in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        # (x - h_mm) p_{m-1}
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for i, c in enumerate(prev):
            cur[i + 1] = (cur[i + 1] + c) % p
            cur[i] = (cur[i] - H[m - 1][m - 1] * c) % p
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            coef = H[i - 1][m - 1] * prod % p
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _roots(poly, p):
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


# ------------------------------------------------------------ class functions


def scale_rootsum(terms, factor: int, n: int):
    """Re-express a root sum for conductor m = n/factor in conductor n."""
    return tuple(((e * factor) % n, m) for e, m in terms)


def conj_rootsum(terms, n: int):
    return tuple(((-e) % n, m) for e, m in terms)


def add_rootsums(a, b, n: int, scale: int = 1):
    acc = dict(a)
    for e, m in b:
        acc[e] = acc.get(e, 0) + scale * m
    return tuple(sorted((e % n, m) for e, m in acc.items() if m))


def mul_rootsums(a, b, n: int):
    acc = {}
    for e1, m1 in a:
        for e2, m2 in b:
            k = (e1 + e2) % n
            acc[k] = acc.get(k, 0) + m1 * m2
    return tuple(sorted((e, m) for e, m in acc.items() if m))


def rootsum_value(terms, n: int) -> CyclotomicNumber:
    return CyclotomicNumber.from_root_sum(n, terms)


def inner_product(sizes, order: int, f, g, n: int):
    """(1/|G|) sum_k |K_k| f_k conj(g_k) exactly; Fraction if rational else CyclotomicNumber."""
    acc = [0] * n
    for h, fk, gk in zip(sizes, f, g):
        if not fk or not gk:
            continue
        for e1, m1 in fk:
            for e2, m2 in gk:
                acc[(e1 - e2) % n] += h * m1 * m2
    red = reduce_dense(n, acc)
    if all(c == 0 for c in red[1:]):
        return Fraction(red[0], order)
    return CyclotomicNumber(n, red) / order


def rootsums_equal(a, b, n: int) -> bool:
    acc = [0] * n
    for e, m in a:
        acc[e % n] += m
    for e, m in b:
        acc[e % n] -= m
    return not any(reduce_dense(n, acc))


class ClassFunction:
    """Z[zeta_N]-valued class function on a concrete group, stored as root sums."""

    __slots__ = ("group", "conductor", "values")

    def __init__(self, group: ConcreteGroup, conductor: int, values):
        self.group = group
        self.conductor = conductor
        self.values = [tuple(sorted((e % conductor, m) for e, m in v if m)) for v in values]

    def __add__(self, other):
        n = self.conductor
        return ClassFunction(self.group, n, [add_rootsums(a, b, n) for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        n = self.conductor
        return ClassFunction(self.group, n,
                             [add_rootsums(a, b, n, -1) for a, b in zip(self.values, other.values)])

    def scaled(self, c: int):
        return ClassFunction(self.group, self.conductor, [tuple((e, c * m) for e, m in v) for v in self.values])

    def value(self, k: int) -> CyclotomicNumber:
        return rootsum_value(self.values[k], self.conductor)

    def degree(self):
        return self.value(0)

    def inner(self, other: "ClassFunction"):
        n = self.conductor
        if other.conductor != n:
            raise ValueError("class functions must share a conductor")
        cl = self.group.classes
        return inner_product(cl.sizes, self.group.order, self.values, other.values, n)

    def equals(self, other: "ClassFunction") -> bool:
        n = self.conductor
        return all(rootsums_equal(a, b, n) for a, b in zip(self.values, other.values))

    def is_zero(self) -> bool:
        n = self.conductor
        return all(rootsums_equal(a, (), n) for a in self.values)


# ------------------------------------------------------------ Dixon algorithm


def _choose_prime(n: int, order: int, nclasses: int) -> int:
    bound = max(2 * isqrt(order) + 2, nclasses + 2)
    k = 1
    while True:
        p = k * n + 1
        if p > bound and sympy.isprime(p):
            return p
        k += 1


class CharacterTable:
    """Irreducible characters of a concrete group as exact root sums over class representatives."""

    def __init__(self, group: ConcreteGroup, rows, degrees, prime: int, root: int):
        self.group = group
        self.classes = group.classes
        self.conductor = group.exponent
        self.rows = rows  # rows[i][k] = root sum of chi_i(g_k)
        self.degrees = degrees
        self.prime = prime
        self.root = root

    def __len__(self):
        return len(self.rows)

    def value(self, i: int, k: int) -> CyclotomicNumber:
        return rootsum_value(self.rows[i][k], self.conductor)

    def row(self, i: int) -> list:
        return [self.value(i, k) for k in range(len(self.classes))]

    def character(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.conductor, self.rows[i])

    @cached_property
    def characters(self) -> list:
        return [self.character(i) for i in range(len(self.rows))]

    @cached_property
    def normal_forms(self) -> list:
        """Power-basis integer tuples of every value, for hashing and exact comparison."""
        n = self.conductor
        return [tuple(tuple(reduce_dense(n, _dense(v, n))) for v in row) for row in self.rows]

    def decompose(self, f: ClassFunction) -> list:
        """Exact inner products <f, chi_i> for all i."""
        n = self.conductor
        if f.conductor != n:
            f = ClassFunction(f.group, n, [scale_rootsum(v, n // f.conductor, n) for v in f.values])
        return [f.inner(chi) for chi in self.characters]

    def constituents(self, f: ClassFunction) -> dict:
        out = {}
        for i, c in enumerate(self.decompose(f)):
            if c != 0:
                out[i] = c
        return out

    def check_orthogonality(self) -> None:
        """Exact row and column orthogonality; raises LiftFailure on violation."""
        n = self.conductor
        cl = self.classes
        order = self.group.order
        r = len(self.rows)
        if r != len(cl):
            raise LiftFailure(f"{r} characters for {len(cl)} classes")
        if sum(d * d for d in self.degrees) != order:
            raise LiftFailure("sum of squared degrees differs from the group order")
        for i in range(r):
            for j in range(i, r):
                ip = inner_product(cl.sizes, order, self.rows[i], self.rows[j], n)
                if ip != (1 if i == j else 0):
                    raise LiftFailure(f"row orthogonality fails for ({i},{j}): {ip}")
        cols = list(zip(*self.rows))
        for k in range(r):
            for l in range(k, r):
                acc = [0] * n
                for a, b in zip(cols[k], cols[l]):
                    for e1, m1 in a:
                        for e2, m2 in b:
                            acc[(e1 - e2) % n] += m1 * m2
                red = reduce_dense(n, acc)
                want = cl.centraliser_order(k) if k == l else 0
                if red[0] != want or any(red[1:]):
                    raise LiftFailure(f"column orthogonality fails for ({k},{l})")


def _dense(terms, n):
    acc = [0] * n
    for e, m in terms:
        acc[e % n] += m
    return acc


def character_table(G: ConcreteGroup, check: bool = True) -> CharacterTable:
    """Irreducible characters of G by simultaneous diagonalisation of the class algebra."""
    cache = G.data.get("_table_cache")
    if cache is not None and cache[0] is G:
        return cache[1]
    cl = G.classes
    r = len(cl)
    order = G.order
    N = G.exponent
    p = _choose_prime(N, order, r)
    g = int(sympy.primitive_root(p))
    z = pow(g, (p - 1) // N, p)

    # structure constants: (M_j)_{ik} = #{x in K_j : x^-1 g_k in K_i}
    mats = []
    for j in range(r):
        M = [[0] * r for _ in range(r)]
        for x in cl.members[j]:
            xi = G.inv(x)
            for k, gk in enumerate(cl.reps):
                M[cl.class_of_element(G.mul(xi, gk))][k] += 1
        mats.append(M)

    rng = random.Random(12345)
    coeffs = [rng.randrange(1, p) for _ in range(r)]
    combo = [[sum(coeffs[j] * mats[j][i][k] for j in range(1, r)) % p for k in range(r)] for i in range(r)]
    operators = [combo] + [[[x % p for x in row] for row in mats[j]] for j in range(1, r)]

    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    for M in operators:
        if all(len(V) == 1 for V in spaces):
            break
        new_spaces = []
        for V in spaces:
            if len(V) == 1:
                new_spaces.append(V)
                continue
            B, piv = _rref(V, p)
            d = len(B)
            images = [[sum(M[i][k] * b[k] for k in range(r)) % p for i in range(r)] for b in B]
            A = [[images[t][piv[s]] for t in range(d)] for s in range(d)]
            found = 0
            for lam in _roots(_charpoly(A, p), p):
                shifted = [[(A[s][t] - (lam if s == t else 0)) % p for t in range(d)] for s in range(d)]
                ker = _nullspace(shifted, p)
                vecs = [[sum(c[s] * B[s][i] for s in range(d)) % p for i in range(r)] for c in ker]
                found += len(vecs)
                new_spaces.append(vecs)
            if found != d:
                raise LiftFailure("class algebra did not split over the chosen prime")
        spaces = new_spaces
    if any(len(V) != 1 for V in spaces):
        raise LiftFailure("could not separate all characters")

    rows, degrees = [], []
    sizes = cl.sizes
    inv_cls = cl.inverse_class
    for (w,) in spaces:
        if w[0] == 0:
            raise LiftFailure("eigenvector vanishes at the identity class")
        inv0 = pow(w[0], -1, p)
        w = [x * inv0 % p for x in w]
        S = sum(w[k] * w[inv_cls[k]] * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = order * pow(S, -1, p) % p
        deg = next((d for d in range(1, isqrt(order) + 1) if d * d % p == d2 and order % d == 0), None)
        if deg is None:
            raise LiftFailure("no admissible degree")
        chi = [w[k] * deg * pow(sizes[k], -1, p) % p for k in range(r)]
        row = []
        for k in range(r):
            o = cl.orders[k]
            zo = pow(z, N // o, p)
            vals = [chi[cl.power_map(k, s)] for s in range(o)]
            inv_o = pow(o, -1, p)
            terms = []
            total = 0
            for t in range(o):
                m = sum(vals[s] * pow(zo, (-t * s) % o, p) for s in range(o)) * inv_o % p
                if m > deg:
                    raise LiftFailure(f"eigenvalue multiplicity {m} exceeds degree {deg}")
                if m:
                    terms.append((t * (N // o), m))
                    total += m
            if total != deg:
                raise LiftFailure("multiplicities do not sum to the degree")
            row.append(tuple(sorted(terms)))
        rows.append(row)
        degrees.append(deg)

    order_idx = sorted(range(r), key=lambda i: (rows[i] != [((0, 1),)] * r, degrees[i], rows[i]))
    table = CharacterTable(G, [rows[i] for i in order_idx], [degrees[i] for i in order_idx], p, z)
    if check:
        table.check_orthogonality()
    G.data["_table_cache"] = (G, table)
    return table
