"""Closed-form character tables of GL_2(q) and SL_2(q) and their matching with Dixon tables.

Parametrisation. Let t generate F_{q^2}^x and g = t^(q+1) generate F_q^x. A character of
F_q^x is an index a mod q-1 with alpha_a(g) = zeta_{q-1}^a, a character of F_{q^2}^x is an
index c mod q^2-1 with phi_c(t) = zeta_{q^2-1}^c.  All exponents below are taken with
respect to N = q^2 - 1, so alpha_a(g^k) = zeta_N^((q+1) a k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import CharacterTable
from .exact import CyclotomicNumber, UniPoly
from .fields import prime_power, quadratic_extension


@dataclass(frozen=True)
class ClassLabel:
    kind: str       # central, unip, split, ell
    params: tuple

    def __str__(self):
        return f"{self.kind}{self.params}"


@dataclass(frozen=True)
class SeriesLabel:
    """Semisimple class of the dual group, as a multiset of eigenvalue angles in Q/Z.

    For SL_2 only the pair {x, -x} is recorded (the dual is PGL_2), with a torus tag
    distinguishing the two rational classes at x = 1/2.
    """

    angles: tuple
    tag: str | None = None

    def __str__(self):
        body = ",".join(str(a) for a in self.angles)
        return f"[{body}]" + (f"_{self.tag}" if self.tag else "")

    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.angles)

    def ell_parts(self, ell: int) -> tuple:
        """(s_l, s_l') as SeriesLabels: split every angle into l-part and l'-part."""
        lp, rest = [], []
        for a in self.angles:
            x, y = _split_angle(a, ell)
            lp.append(x)
            rest.append(y)
        tag_l = self.tag if any(x == Fraction(1, 2) for x in lp) else None
        tag_r = self.tag if any(y == Fraction(1, 2) for y in rest) else None
        return SeriesLabel(tuple(sorted(lp)), tag_l), SeriesLabel(tuple(sorted(rest)), tag_r)

    def is_ell_regular(self, ell: int) -> bool:
        return self.ell_parts(ell)[0].is_trivial()


def _split_angle(a: Fraction, ell: int):
    """a = x + y in Q/Z with x of l-power order and y of l'-order."""
    d = a.denominator
    m, le = d, 1
    while m % ell == 0:
        m //= ell
        le *= ell
    if le == 1:
        return Fraction(0), a
    # CRT: 1 = u*le + v*m
    u = pow(le, -1, m) if m > 1 else 0
    v = (1 - u * le) // m
    x = (a * v * m) % 1
    y = (a * u * le) % 1
    return x, y


def _angle(num: int, den: int) -> Fraction:
    return Fraction(num % den, den)


def _gl_label(x: Fraction, y: Fraction) -> SeriesLabel:
    return SeriesLabel(tuple(sorted((x % 1, y % 1))))


def _sl_label(x: Fraction, torus: str) -> SeriesLabel:
    x = x % 1
    x = min(x, (1 - x) % 1)
    tag = torus if x == Fraction(1, 2) else None
    return SeriesLabel((x,), tag)


@dataclass
class GenericCharacter:
    family: str
    param: tuple
    degree_poly: tuple          # (UniPoly numerator, integer denominator)
    series: SeriesLabel
    values: dict = field(repr=False)   # ClassLabel -> CyclotomicNumber

    @property
    def degree(self) -> int:
        return int(self.values[ClassLabel("central", (0,))].to_rational())

    def value(self, label: ClassLabel) -> CyclotomicNumber:
        return self.values[label]

    def __str__(self):
        return f"{self.family}{self.param}"


@dataclass
class GenericClass:
    label: ClassLabel
    size: int


class GenericTable:
    """Generic table specialised at q, with a classifier for concrete group elements."""

    def __init__(self, gtype: str, q: int, classes, characters, classify):
        self.gtype, self.q = gtype, q
        self.classes = classes
        self.characters = characters
        self._classify = classify
        self.identity_label = classes[0].label

    def classify(self, g) -> ClassLabel:
        return self._classify(g)

    def degrees(self) -> list:
        return [c.degree for c in self.characters]

    def __len__(self):
        return len(self.characters)

    def check_counts(self, group_order: int) -> bool:
        return (len(self.characters) == len(self.classes)
                and sum(c.size for c in self.classes) == group_order
                and sum(d * d for d in self.degrees()) == group_order)


def _z(N: int, *exps) -> CyclotomicNumber:
    return CyclotomicNumber.from_root_sum(N, [(e % N, 1) for e in exps])


def _int(n) -> CyclotomicNumber:
    return CyclotomicNumber.from_rational(Fraction(n))


# ----------------------------------------------------------------- GL_2

def gl2_table(q: int) -> GenericTable:
    E = quadratic_extension(q)
    F = E.F
    N = q * q - 1
    Q1 = q + 1
    logq = {a: E.log[a] // Q1 for a in range(1, q)}  # F_q^x -> Z/(q-1), base g
    ell_canon = {}
    for j in range(N):
        if j % Q1:
            ell_canon[j] = min(j, (j * q) % N)
    tn_to_ell = {}
    for j, c in ell_canon.items():
        z = E.exp[j]
        tn_to_ell[(E.trace(z), E.norm(z))] = c

    classes = [GenericClass(ClassLabel("central", (k,)), 1) for k in range(q - 1)]
    classes += [GenericClass(ClassLabel("unip", (k,)), N) for k in range(q - 1)]
    classes += [GenericClass(ClassLabel("split", (k1, k2)), q * (q + 1))
                for k1 in range(q - 1) for k2 in range(k1 + 1, q - 1)]
    classes += [GenericClass(ClassLabel("ell", (c,)), q * (q - 1)) for c in sorted(set(ell_canon.values()))]

    def classify(A):
        a, b, c, d = A
        if b == 0 and c == 0 and a == d:
            return ClassLabel("central", (logq[a],))
        tr = F.add(a, d)
        det = F.sub(F.mul(a, d), F.mul(b, c))
        roots = [x for x in range(1, q) if F.add(F.sub(F.mul(x, x), F.mul(tr, x)), det) == 0]
        if len(roots) == 1:
            return ClassLabel("unip", (logq[roots[0]],))
        if len(roots) == 2:
            return ClassLabel("split", tuple(sorted(logq[r] for r in roots)))
        return ClassLabel("ell", (tn_to_ell[(tr, det)],))

    def lin_value(a, lab, steinberg):
        k = lab.params
        if lab.kind == "central":
            v = _z(N, 2 * Q1 * a * k[0])
            return v * q if steinberg else v
        if lab.kind == "unip":
            return _int(0) if steinberg else _z(N, 2 * Q1 * a * k[0])
        if lab.kind == "split":
            return _z(N, Q1 * a * (k[0] + k[1]))
        v = _z(N, Q1 * a * k[0])
        return -v if steinberg else v

    def ps_value(a, b, lab):
        k = lab.params
        if lab.kind == "central":
            return _z(N, Q1 * (a + b) * k[0]) * (q + 1)
        if lab.kind == "unip":
            return _z(N, Q1 * (a + b) * k[0])
        if lab.kind == "split":
            return _z(N, Q1 * (a * k[0] + b * k[1]), Q1 * (a * k[1] + b * k[0]))
        return _int(0)

    def ds_value(c, lab):
        k = lab.params
        if lab.kind == "central":
            return _z(N, c * Q1 * k[0]) * (q - 1)
        if lab.kind == "unip":
            return -_z(N, c * Q1 * k[0])
        if lab.kind == "split":
            return _int(0)
        j = k[0]
        return -_z(N, c * j, c * q * j)

    x = UniPoly.x()
    chars = []
    for a in range(q - 1):
        fam = "unipotent-trivial" if a == 0 else "linear-twist"
        lab = _gl_label(_angle(a, q - 1), _angle(a, q - 1))
        chars.append(GenericCharacter(fam, (a, "trivial"), (UniPoly.constant(1), 1), lab,
                                      {c.label: lin_value(a, c.label, False) for c in classes}))
    for a in range(q - 1):
        fam = "Steinberg" if a == 0 else "linear-twist"
        lab = _gl_label(_angle(a, q - 1), _angle(a, q - 1))
        chars.append(GenericCharacter(fam, (a, "Steinberg"), (x, 1), lab,
                                      {c.label: lin_value(a, c.label, True) for c in classes}))
    for a in range(q - 1):
        for b in range(a + 1, q - 1):
            lab = _gl_label(_angle(a, q - 1), _angle(b, q - 1))
            chars.append(GenericCharacter("principal-series", (a, b), (x + 1, 1), lab,
                                          {c.label: ps_value(a, b, c.label) for c in classes}))
    for c in sorted(set(ell_canon.values())):
        lab = _gl_label(_angle(c, N), _angle(c * q, N))
        chars.append(GenericCharacter("discrete-series", (c,), (x - 1, 1), lab,
                                      {cl.label: ds_value(c, cl.label) for cl in classes}))
    return GenericTable("GL", q, classes, chars, classify)


# ----------------------------------------------------------------- SL_2

def _gauss_sqrt(q: int) -> CyclotomicNumber:
    """A square root of (-1)^((q-1)/2) q as a cyclotomic number (q odd)."""
    p, k = prime_power(q)
    if k % 2 == 0:
        return _int(p ** (k // 2))
    terms = []
    for x in range(1, p):
        leg = 1 if pow(x, (p - 1) // 2, p) == 1 else -1
        terms.append((x, leg))
    g = CyclotomicNumber.from_root_sum(p, terms)
    return g * (p ** ((k - 1) // 2))


def sl2_table(q: int) -> GenericTable:
    E = quadratic_extension(q)
    F = E.F
    N = q * q - 1
    Q1, Qm = q + 1, q - 1
    logq = {a: E.log[a] // Q1 for a in range(1, q)}
    odd = q % 2 == 1
    # torus parameters: split diag(g^k, g^-k), k mod q-1; Coxeter h^j with h = t^(q-1), j mod q+1
    split_ks = sorted({min(k, (Qm - k) % Qm) for k in range(Qm)} - ({0, Qm // 2} if odd else {0}))
    ell_js = sorted({min(j, (Q1 - j) % Q1) for j in range(Q1)} - ({0, Q1 // 2} if odd else {0}))
    tn_to_j = {}
    for j in range(1, Q1):
        z = E.exp[(j * Qm) % N]
        tn_to_j[E.trace(z)] = min(j, Q1 - j)
    centre = [0, Qm // 2] if odd else [0]

    classes = [GenericClass(ClassLabel("central", (z,)), 1) for z in centre]
    if odd:
        classes += [GenericClass(ClassLabel("unip", (z, s)), N // 2) for z in centre for s in (0, 1)]
    else:
        classes += [GenericClass(ClassLabel("unip", (0, 0)), N)]
    classes += [GenericClass(ClassLabel("split", (k,)), q * (q + 1)) for k in split_ks]
    classes += [GenericClass(ClassLabel("ell", (j,)), q * (q - 1)) for j in ell_js]

    def is_square(x):
        return logq[x] % 2 == 0

    def classify(A):
        a, b, c, d = A
        if b == 0 and c == 0 and a == d:
            return ClassLabel("central", (logq[a],))
        tr = F.add(a, d)
        roots = [x for x in range(1, q) if F.add(F.sub(F.mul(x, x), F.mul(tr, x)), 1) == 0]
        if len(roots) == 1:
            r = roots[0]
            if not odd:
                return ClassLabel("unip", (0, 0))
            ri = F.inv(r)
            # nilpotent part r^-1 A - I, square class of its SL_2-normal form
            nb, nc = F.mul(ri, b), F.mul(ri, c)
            x = F.neg(nc) if nc else nb
            return ClassLabel("unip", (logq[r], 0 if is_square(x) else 1))
        if len(roots) == 2:
            k = logq[roots[0]]
            return ClassLabel("split", (min(k, (Qm - k) % Qm),))
        return ClassLabel("ell", (tn_to_j[tr],))

    def central_sign(z, a):
        # alpha_a(g^z)
        return _z(N, Q1 * a * z)

    def ps_value(a, lab):
        kind, p_ = lab.kind, lab.params
        if kind == "central":
            return central_sign(p_[0], a) * (q + 1)
        if kind == "unip":
            return central_sign(p_[0], a)
        if kind == "split":
            k = p_[0]
            return _z(N, Q1 * a * k, -Q1 * a * k)
        return _int(0)

    def ds_value(c, lab):
        # psi_c(h^j) = zeta_{q+1}^(c j) = zeta_N^((q-1) c j); -1 = h^((q+1)/2) and g^((q-1)/2) = -1
        kind, p_ = lab.kind, lab.params
        if kind in ("central", "unip"):
            j = 0 if p_[0] == 0 else Q1 // 2
            v = _z(N, Qm * c * j)
            return v * (q - 1) if kind == "central" else -v
        if kind == "split":
            return _int(0)
        j = p_[0]
        return -_z(N, Qm * c * j, -Qm * c * j)

    def st_value(lab):
        return {"central": _int(q), "unip": _int(0), "split": _int(1), "ell": _int(-1)}[lab.kind]

    x = UniPoly.x()
    chars = [GenericCharacter("unipotent-trivial", (), (UniPoly.constant(1), 1), _sl_label(Fraction(0), ""),
                              {c.label: _int(1) for c in classes}),
             GenericCharacter("Steinberg", (), (x, 1), _sl_label(Fraction(0), ""),
                              {c.label: st_value(c.label) for c in classes})]
    for a in range(1, Qm):
        if (2 * a) % Qm == 0 or a > Qm - a:
            continue
        chars.append(GenericCharacter("principal-series", (a,), (x + 1, 1), _sl_label(_angle(a, Qm), "split"),
                                      {c.label: ps_value(a, c.label) for c in classes}))
    for c in range(1, Q1):
        if (2 * c) % Q1 == 0 or c > Q1 - c:
            continue
        chars.append(GenericCharacter("discrete-series", (c,), (x - 1, 1), _sl_label(_angle(c, Q1), "cox"),
                                      {cl.label: ds_value(c, cl.label) for cl in classes}))
    if odd:
        r = _gauss_sqrt(q)
        half = Fraction(1, 2)
        a0, c0 = Qm // 2, Q1 // 2
        for sgn in (1, -1):
            vals = {}
            for cl in classes:
                kind, p_ = cl.label.kind, cl.label.params
                if kind == "central":
                    vals[cl.label] = central_sign(p_[0], a0) * Fraction(q + 1, 2)
                elif kind == "unip":
                    s = sgn if p_[1] == 0 else -sgn
                    vals[cl.label] = central_sign(p_[0], a0) * ((r * s + 1) * half)
                elif kind == "split":
                    vals[cl.label] = _z(N, Q1 * a0 * p_[0])
                else:
                    vals[cl.label] = _int(0)
            chars.append(GenericCharacter("half-principal", (sgn,), ((x + 1), 2),
                                          _sl_label(Fraction(1, 2), "split"), vals))
        for sgn in (1, -1):
            vals = {}
            for cl in classes:
                kind, p_ = cl.label.kind, cl.label.params
                j = 0 if p_ and p_[0] == 0 else Q1 // 2
                if kind == "central":
                    vals[cl.label] = _z(N, Qm * c0 * j) * Fraction(q - 1, 2)
                elif kind == "unip":
                    s = sgn if p_[1] == 0 else -sgn
                    vals[cl.label] = _z(N, Qm * c0 * j) * ((r * s - 1) * half)
                elif kind == "split":
                    vals[cl.label] = _int(0)
                else:
                    vals[cl.label] = -_z(N, Qm * c0 * p_[0])
            chars.append(GenericCharacter("half-discrete", (sgn,), ((x - 1), 2),
                                          _sl_label(Fraction(1, 2), "cox"), vals))
    return GenericTable("SL", q, classes, chars, classify)


def generic_table(gtype: str, q: int) -> GenericTable:
    return gl2_table(q) if gtype.upper() == "GL" else sl2_table(q)


# ----------------------------------------------------------------- matching

@dataclass
class TableMatch:
    """Bijections generic characters <-> Dixon rows and Dixon classes -> generic class labels."""

    row_of: list          # generic index -> Dixon row
    generic_of: list      # Dixon row -> generic index
    class_labels: list    # Dixon class -> ClassLabel
    sizes_agree: bool


def match_tables(gen: GenericTable, table: CharacterTable) -> TableMatch | None:
    """Exact comparison up to permutation; None if the tables differ."""
    G = table.group
    cl = table.classes
    labels = [gen.classify(r) for r in cl.reps]
    if len(set(labels)) != len(labels) or len(labels) != len(gen.classes):
        return None
    size_of = {c.label: c.size for c in gen.classes}
    sizes_agree = all(size_of[lab] == cl.sizes[k] for k, lab in enumerate(labels))
    dixon_rows = {}
    for i in range(len(table)):
        dixon_rows.setdefault(tuple(table.row(i)), []).append(i)
    row_of = []
    used = set()
    for chi in gen.characters:
        key = tuple(chi.values[lab] for lab in labels)
        cands = [i for i in dixon_rows.get(key, []) if i not in used]
        if not cands:
            return None
        row_of.append(cands[0])
        used.add(cands[0])
    if len(used) != len(table):
        return None
    generic_of = [0] * len(table)
    for g, i in enumerate(row_of):
        generic_of[i] = g
    return TableMatch(row_of, generic_of, labels, sizes_agree)
