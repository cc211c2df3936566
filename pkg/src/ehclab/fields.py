"""Small finite fields as lookup tables, their quadratic extensions, and matrices."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import sympy


def prime_power(q: int) -> tuple:
    """(p, k) with q = p**k, or ValueError."""
    f = sympy.factorint(q)
    if q < 2 or len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return int(p), int(k)


def _polymulmod(a, b, mod, p):
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    for j in range(len(out) - 1, k - 1, -1):
        c = out[j]
        if c:
            for d in range(k + 1):
                out[j - k + d] = (out[j - k + d] - c * mod[d]) % p
    out = out[:k] + [0] * max(0, k - len(out))
    return out


class GF:
    """F_q with elements 0..q-1 (base-p digit vectors of polynomials in a primitive root)."""

    def __init__(self, q: int):
        p, k = prime_power(q)
        self.q, self.p, self.k = q, p, k
        self.modulus = self._primitive_modulus()
        # exp/log tables with respect to the root of the modulus
        self.exp = []
        if k == 1:
            g = self._prim_root()
            self.exp = [pow(g, i, p) for i in range(q - 1)]
        else:
            cur = [1] + [0] * (k - 1)
            for _ in range(q - 1):
                self.exp.append(self._encode(cur))
                cur = _polymulmod(cur, [0, 1], self.modulus, p)
        self.log = {v: i for i, v in enumerate(self.exp)}
        self.gen = self.exp[1] if q > 2 else 1
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._decode(a)
            for b in range(q):
                db = self._decode(b)
                add[a][b] = self._encode([(x + y) % p for x, y in zip(da, db)])
        self.add_t = add
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = self.log[a]
            for b in range(1, q):
                mul[a][b] = self.exp[(la + self.log[b]) % (q - 1)]
        self.mul_t = mul
        self.neg_t = [self._encode([(-x) % p for x in self._decode(a)]) for a in range(q)]
        self.inv_t = [0] + [self.exp[(-self.log[a]) % (q - 1)] for a in range(1, q)]

    def _prim_root(self):
        return int(sympy.primitive_root(self.p)) if self.p > 2 else 1

    def _primitive_modulus(self):
        p, k = self.p, self.k
        if k == 1:
            return None
        n = p ** k - 1
        for tail in product(range(p), repeat=k):
            mod = list(tail) + [1]
            if mod[0] == 0:
                continue
            cur = [1] + [0] * (k - 1)
            order = None
            for i in range(1, n + 1):
                cur = _polymulmod(cur, [0, 1], mod, p)
                if cur == [1] + [0] * (k - 1):
                    order = i
                    break
            if order == n:
                return mod
        raise RuntimeError("no primitive polynomial found")

    def _encode(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _decode(self, a: int) -> list:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_t[a]

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n (prime-field element)."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    return GF(q)


class QuadraticExtension:
    """F_{q^2} = F_q[t]/(t^2 - a t - b) with t a generator of the multiplicative group.

    Elements are encoded as u + q*v for u + v t.
    """

    def __init__(self, F: GF):
        self.F = F
        q = F.q
        self.q = q
        self.size = q * q
        for a, b in product(range(q), range(q)):
            if b == 0:
                continue
            if any(F.sub(F.sub(F.mul(x, x), F.mul(a, x)), b) == 0 for x in range(q)):
                continue
            self.a, self.b = a, b
            if self._order(self.t) == q * q - 1:
                break
        else:
            raise RuntimeError("no primitive quadratic found")
        # discrete logarithms with respect to t
        self.exp = []
        cur = 1
        for _ in range(q * q - 1):
            self.exp.append(cur)
            cur = self.mul(cur, self.t)
        self.log = {v: i for i, v in enumerate(self.exp)}

    @property
    def t(self):
        return self.q  # u=0, v=1

    def split(self, z):
        return z % self.q, z // self.q

    def make(self, u, v):
        return u + self.q * v

    def mul(self, x, y):
        F = self.F
        u1, v1 = self.split(x)
        u2, v2 = self.split(y)
        vv = F.mul(v1, v2)
        u = F.add(F.mul(u1, u2), F.mul(self.b, vv))
        v = F.add(F.add(F.mul(u1, v2), F.mul(u2, v1)), F.mul(self.a, vv))
        return self.make(u, v)

    def _order(self, z):
        cur, n = z, 1
        while cur != 1:
            cur = self.mul(cur, z)
            n += 1
            if n > self.size:
                return None
        return n

    def pow(self, z, e):
        if z == 0:
            return 0 if e else 1
        return self.exp[(self.log[z] * e) % (self.size - 1)]

    def norm(self, z):
        return self.split(self.pow(z, self.q + 1))[0]

    def frobenius(self, z):
        return self.pow(z, self.q)

    def trace(self, z):
        return self.split(_add2(self, z, self.frobenius(z)))[0]

    def as_matrix(self, z):
        """2x2 matrix of multiplication by z in the basis (1, t), row-major."""
        F = self.F
        u, v = self.split(z)
        # t*1 = t, t*t = b + a t; columns are images of the basis
        return (u, F.mul(v, self.b), v, F.add(u, F.mul(v, self.a)))

    @property
    def gen_q(self):
        """Generator t^(q+1) of F_q^x used for all parametrisations."""
        return self.norm(self.t)


def _add2(E, x, y):
    F = E.F
    u1, v1 = E.split(x)
    u2, v2 = E.split(y)
    return E.make(F.add(u1, u2), F.add(v1, v2))


@lru_cache(maxsize=None)
def quadratic_extension(q: int) -> QuadraticExtension:
    return QuadraticExtension(gf(q))


class MatrixOps:
    """n x n matrices over a GF, stored as row-major tuples."""

    def __init__(self, F: GF, n: int):
        self.F, self.n = F, n
        self.identity = tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    def mul(self, A, B):
        n, F = self.n, self.F
        mt, at = F.mul_t, F.add_t
        out = []
        for i in range(n):
            row = A[i * n:(i + 1) * n]
            for j in range(n):
                acc = 0
                for k in range(n):
                    a = row[k]
                    if a:
                        b = B[k * n + j]
                        if b:
                            acc = at[acc][mt[a][b]]
                out.append(acc)
        return tuple(out)

    def det(self, A):
        n, F = self.n, self.F
        if n == 1:
            return A[0]
        if n == 2:
            return F.sub(F.mul(A[0], A[3]), F.mul(A[1], A[2]))
        M = [list(A[i * n:(i + 1) * n]) for i in range(n)]
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if M[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                d = F.neg(d)
            d = F.mul(d, M[c][c])
            inv = F.inv(M[c][c])
            for r in range(c + 1, n):
                if M[r][c]:
                    f = F.mul(M[r][c], inv)
                    M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[c])]
        return d

    def inv(self, A):
        n, F = self.n, self.F
        if n == 2:
            d = F.inv(self.det(A))
            return (F.mul(d, A[3]), F.mul(d, F.neg(A[1])), F.mul(d, F.neg(A[2])), F.mul(d, A[0]))
        M = [list(A[i * n:(i + 1) * n]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if M[r][c])
            M[c], M[piv] = M[piv], M[c]
            inv = F.inv(M[c][c])
            M[c] = [F.mul(inv, x) for x in M[c]]
            for r in range(n):
                if r != c and M[r][c]:
                    f = M[r][c]
                    M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[c])]
        return tuple(x for row in M for x in row[n:])

    def trace(self, A):
        acc = 0
        for i in range(self.n):
            acc = self.F.add(acc, A[i * self.n + i])
        return acc

    def scalar(self, a):
        n = self.n
        return tuple(a if i == j else 0 for i in range(n) for j in range(n))

    def diag(self, entries):
        n = self.n
        return tuple(entries[i] if i == j else 0 for i in range(n) for j in range(n))

    def add(self, A, B):
        return tuple(self.F.add(a, b) for a, b in zip(A, B))

    def scale(self, c, A):
        return tuple(self.F.mul(c, a) for a in A)

    def charpoly(self, A):
        """Characteristic polynomial coefficients (lowest first) for n <= 2, else via Faddeev-style expansion."""
        F = self.F
        if self.n == 2:
            return (self.det(A), F.neg(self.trace(A)), 1)
        raise NotImplementedError("charpoly only needed for n = 2")
