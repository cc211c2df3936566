"""l-blocks via central characters, defects and Brauer block induction."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import CharacterTable, character_table
from .errors import NonIntegralCentralCharacter
from .exact import CyclotomicNumber, EllReduction, ell_valuation, make_ell_reduction
from .groups import ConcreteGroup


@dataclass(frozen=True)
class BlockId:
    """An l-block of a concrete group."""

    index: int
    defect: int
    members: tuple          # character indices into the group's table
    signature: tuple = field(repr=False)  # reduced central character, one entry per class

    def __contains__(self, i) -> bool:
        return i in self.members

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class UndefinedInduction:
    """Brauer induction b^G does not match any block of G."""

    reason: str

    def __bool__(self):
        return False


def defect(table: CharacterTable, i: int, ell: int) -> int:
    """nu_l(|G|) - nu_l(chi_i(1))."""
    return ell_valuation(table.group.order, ell) - ell_valuation(table.degrees[i], ell)


def central_character(table: CharacterTable, i: int, red: EllReduction) -> tuple:
    """Reduction of omega_chi(K) = |K| chi(g_K) / chi(1) for every class K."""
    cl = table.classes
    deg = table.degrees[i]
    out = []
    for k, terms in enumerate(table.rows[i]):
        x = CyclotomicNumber.from_root_sum(table.conductor, terms, Fraction(cl.sizes[k], deg))
        if not x.is_integral():
            raise NonIntegralCentralCharacter(f"omega of character {i} on class {k} is {x}")
        out.append(red.reduce(x))
    return tuple(out)


class BlockData:
    """Blocks of one concrete group at one prime, computed from a fixed reduction."""

    def __init__(self, G: ConcreteGroup, ell: int, factor_index: int = 0, red: EllReduction | None = None):
        self.group = G
        self.ell = ell
        self.table = character_table(G)
        self.red = red or make_ell_reduction(G.exponent, ell, factor_index)
        self.omegas = [central_character(self.table, i, self.red) for i in range(len(self.table))]
        groups = {}
        for i, sig in enumerate(self.omegas):
            groups.setdefault(sig, []).append(i)
        blocks = []
        for sig, mem in groups.items():
            d = max(defect(self.table, i, ell) for i in mem)
            blocks.append((mem[0], d, tuple(mem), sig))
        blocks.sort()
        self.blocks = [BlockId(j, d, mem, sig) for j, (_, d, mem, sig) in enumerate(blocks)]
        self.block_of = {}
        for b in self.blocks:
            for i in b.members:
                self.block_of[i] = b
        self._by_sig = {b.signature: b for b in self.blocks}

    def defect(self, i: int) -> int:
        return defect(self.table, i, self.ell)

    def principal(self) -> BlockId:
        return self.block_of[0]

    def block_with_signature(self, sig):
        return self._by_sig.get(sig)


def block_data(G: ConcreteGroup, ell: int, factor_index: int = 0) -> BlockData:
    key = ("_blocks", ell, factor_index)
    cached = G.data.get(key)
    if cached is not None and cached.group is G:
        return cached
    bd = BlockData(G, ell, factor_index)
    G.data[key] = bd
    return bd


def block_partition(G: ConcreteGroup, ell: int, factor_index: int = 0) -> list:
    return block_data(G, ell, factor_index).blocks


def brauer_induced_block(H: ConcreteGroup, b: BlockId, G: ConcreteGroup, ell: int,
                         hdata: BlockData | None = None):
    """b^G: the block of G whose central character is K -> lambda_b(K cap H), or UndefinedInduction."""
    return _induce(H, b, block_data(G, ell), ell, hdata)


def _h_omega(H: ConcreteGroup, b: BlockId, red: EllReduction, hdata):
    """Central character of b on H-classes, reduced with G's reduction."""
    table = hdata.table if hdata is not None else character_table(H)
    key = ("_omega_G", red.ell, red.conductor, red.factor_index, b.members[0])
    cached = H.data.get(key)
    if cached is not None:
        return cached
    i = b.members[0]
    vals = central_character(table, i, red)
    H.data[key] = vals
    return vals


def _induce(H, b, gdata: BlockData, ell, hdata):
    G = gdata.group
    red = gdata.red
    omega = _h_omega(H, b, red, hdata)
    hc = H.classes
    gc = G.classes
    acc = [red.zero() for _ in range(len(gc))]
    for k, rep in enumerate(hc.reps):
        K = gc.class_of_element(rep)
        acc[K] = red.add(acc[K], omega[k])
    sig = tuple(acc)
    B = gdata.block_with_signature(sig)
    if B is None:
        return UndefinedInduction(f"no block of {G.name or 'G'} has the induced central character")
    return B

