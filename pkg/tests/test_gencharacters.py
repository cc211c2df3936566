from fractions import Fraction

import pytest

from ehclab.blocks import UndefinedInduction
from ehclab.chartable import character_table
from ehclab.gencharacters import generic_table, match_tables
from ehclab.groups import materialise
from ehclab.instance import COX, SPLIT, EPair, rank_one_instance

GROUPS = [("GL", 3), ("GL", 4), ("GL", 5), ("SL", 3), ("SL", 4), ("SL", 5)]


@pytest.mark.parametrize("gtype,q", GROUPS)
def test_generic_table_matches_dixon(gtype, q):
    gen = generic_table(gtype, q)
    m = match_tables(gen, character_table(materialise(gtype, 2, q)))
    assert m is not None and m.sizes_agree
    assert sum(c.degree ** 2 for c in gen.characters) == materialise(gtype, 2, q).order


def test_table_examples():
    assert len(generic_table("GL", 3).characters) == 8
    assert sorted(c.degree for c in generic_table("SL", 4).characters) == [1, 3, 3, 4, 5]
    for q in (3, 4, 5, 7):
        assert {c.degree for c in generic_table("GL", q).characters} <= {1, q, q + 1, q - 1}


def test_mismatched_tables_are_rejected():
    assert match_tables(generic_table("GL", 3), character_table(materialise("SL", 2, 3))) is None


@pytest.mark.parametrize("gtype,q", GROUPS)
def test_series_partition(gtype, q):
    inst = rank_one_instance(gtype, q)
    part = inst.series_partition()
    assert sorted(i for mem in part.values() for i in mem) == list(range(len(inst.characters)))
    assert inst.series_consistent_with_R()


def test_series_examples():
    inst = rank_one_instance("GL", 5)
    triv = inst.char_index("unipotent-trivial", (0, "trivial"))
    st = inst.char_index("Steinberg", (0, "Steinberg"))
    assert inst.lusztig_series(triv).is_trivial() and inst.lusztig_series(st).is_trivial()
    ps = inst.char_index("principal-series", (1, 2))
    assert inst.lusztig_series(ps) == inst.tori[SPLIT].series((1, 2))
    assert inst.degree(ps) == 6
    assert sum(len(v) for v in inst.series_partition().values()) == 5 * 5 - 1


@pytest.mark.parametrize("gtype,q", GROUPS)
def test_ell_parts_recombine(gtype, q):
    inst = rank_one_instance(gtype, q)
    for ell in (2, 3, 5):
        if q % ell == 0:
            continue
        for s in inst.series_partition():
            a, b = s.ell_parts(ell)
            for x, y in zip(a.angles, b.angles):
                assert x.denominator % ell == 0 or x == 0
                assert y.denominator % ell != 0
            assert sorted(((x + y) % 1) for x, y in _pairs(s, ell)) == sorted(s.angles)


def _pairs(s, ell):
    from ehclab.gencharacters import _split_angle
    return [_split_angle(a, ell) for a in s.angles]


def test_dl_examples():
    inst = rank_one_instance("GL", 5)
    triv = inst.char_index("unipotent-trivial", (0, "trivial"))
    st = inst.char_index("Steinberg", (0, "Steinberg"))
    assert inst.deligne_lusztig_R(SPLIT, (0, 0)).coefficients == {triv: 1, st: 1}
    assert inst.deligne_lusztig_R(COX, (0,)).coefficients == {triv: 1, st: -1}
    R = inst.deligne_lusztig_R(SPLIT, (1, 2))
    assert len(R.coefficients) == 1 and list(R.coefficients.values()) == [1]
    assert inst.degree(next(iter(R.coefficients))) == 6


@pytest.mark.parametrize("gtype,q", GROUPS)
def test_dl_rules_and_adjointness(gtype, q):
    inst = rank_one_instance(gtype, q)
    for kind, T in inst.tori.items():
        for th in T.thetas:
            R = inst.deligne_lusztig_R(kind, th)
            assert R.rule_agrees, (kind, th)
            assert inst.verify_adjointness(kind, th)


@pytest.mark.parametrize("gtype,q", [("GL", 4), ("GL", 5), ("SL", 4), ("SL", 5)])
def test_dl_inner_product_pattern(gtype, q):
    """<R_T(theta), R_T'(theta')> = #{w in W(T, T') : w theta' = theta}."""
    inst = rank_one_instance(gtype, q)
    for k1, T1 in inst.tori.items():
        for k2, T2 in inst.tori.items():
            for a in T1.thetas:
                for b in T2.thetas:
                    want = 0 if k1 != k2 else (int(tuple(a) == tuple(b)) + int(T1.w(b) == tuple(a)))
                    assert inst.R_inner_products(k1, a, k2, b) == want


def test_e_cuspidal_examples():
    inst = rank_one_instance("GL", 5)
    st = inst.char_index("Steinberg", (0, "Steinberg"))
    assert not inst.e_cuspidal_test(st, 2)
    ps = inst.char_index("principal-series", (1, 2))
    assert inst.e_cuspidal_test(ps, 2)
    for th in inst.tori[COX].thetas:
        assert inst.is_e_cuspidal_pair(EPair(COX, th), 2)


def test_e_hc_examples():
    inst = rank_one_instance("GL", 5)
    triv = inst.char_index("unipotent-trivial", (0, "trivial"))
    st = inst.char_index("Steinberg", (0, "Steinberg"))
    assert inst.e_hc_series(EPair(SPLIT, (0, 0))) == {triv, st}
    assert inst.leq_e(EPair(SPLIT, (0, 0)), EPair("G", (st,)))


@pytest.mark.parametrize("gtype,q", GROUPS)
@pytest.mark.parametrize("e", [1, 2])
def test_e_hc_partition_and_transitivity(gtype, q, e):
    inst = rank_one_instance(gtype, q)
    _, disjoint, exhaustive = inst.e_hc_partition(e)
    assert disjoint and exhaustive
    assert inst.transitivity_probe(e) == []


@pytest.mark.parametrize("gtype,q,ell", [("GL", 4, 3), ("GL", 5, 3), ("GL", 5, 2), ("GL", 3, 2),
                                         ("SL", 4, 3), ("SL", 5, 3)])
def test_block_compatibility(gtype, q, ell):
    assert rank_one_instance(gtype, q).block_compatibility(ell) == []


@pytest.mark.parametrize("q,ell", [(4, 3), (5, 3), (5, 2), (3, 2), (7, 3)])
def test_brauer_lusztig_triple_order(q, ell):
    inst = rank_one_instance("GL", q)
    from ehclab.rootdatum import multiplicative_order_e
    e = multiplicative_order_e(q, ell)
    for a, b in inst.ll_e(e):
        if b.levi != "G" or a.levi == "G":
            continue
        ind = inst.pair_block(a, ell)
        assert not isinstance(ind, UndefinedInduction)
        assert ind == inst.block_of_char(b.char[0], ell)
        assert inst.pair_series(a) == inst.lusztig_series(b.char[0])


def test_theorem_a_examples():
    inst = rank_one_instance("GL", 5)
    triv = inst.char_index("unipotent-trivial", (0, "trivial"))
    st = inst.char_index("Steinberg", (0, "Steinberg"))
    items = inst.verify_theorem_A(3)
    assert all(it.ok for it in items)
    b0 = next(it for it in items if it.block.index == 0 and it.series.is_trivial())
    assert b0.members == {triv, st}
    assert b0.cuspidal_pairs == [EPair(COX, (0,))]
    for it in items:
        if it.block.defect == 0:
            assert len(it.members) == 1 and len(it.cuspidal_pairs) == 1
            assert it.cuspidal_pairs[0].levi == "G"


def test_twist_example():
    inst = rank_one_instance("GL", 4)
    triv = inst.char_index("unipotent-trivial", (0, "trivial"))
    j = inst.twist_by_central_ell_character(triv, 1)
    assert inst.degree(j) == 1 and j != triv
    assert inst.characters[j].family == "linear-twist"
    assert inst.lusztig_series(j) != inst.lusztig_series(triv)
    # twisting preserves e-cuspidality (orbits Ab(lambda))
    for i in range(len(inst.characters)):
        for a in range(1, 3):
            assert inst.e_cuspidal_test(inst.twist_by_central_ell_character(i, a), 1) == inst.e_cuspidal_test(i, 1)


def test_parametrisation_examples():
    inst = rank_one_instance("GL", 5)
    rows = inst.parametrisation_cardinality_check(1, ell=2)
    one = next(r for r in rows if r[0] == EPair(SPLIT, (0, 0)))
    assert one[1] == one[2] == 2 and one[3]
    gp = next(r for r in rows if r[0] == EPair(SPLIT, (1, 2)))
    assert gp[1] == gp[2] == 1


def test_parametrisation_without_prime():
    with pytest.raises(ValueError):
        rank_one_instance("GL", 3).parametrisation_cardinality_check(1)


def test_star_R_is_a_fraction():
    inst = rank_one_instance("SL", 4)
    assert isinstance(inst.star_R_inner(SPLIT, 0, (0,)), Fraction)
