from collections import Counter

import pytest
from hypothesis import given, strategies as st

from ehclab.errors import MaxLenExceeded
from ehclab.exact import UniPoly, factor_into_cyclotomics
from ehclab.instance import COX, SPLIT, rank_one_instance
from ehclab.levi import (e_ql_split, enumerate_chains, enumerate_e_split_levis, gl_closed_form_levis,
                         gl_closed_form_pairs, is_E_split, levi_context, phi_e_eigenspace, rederive)
from ehclab.rootdatum import build_group, classify_prime, order_polynomial, torus_order_polynomial, WeylGroup

ID2 = ((1, 0), (0, 1))
SWAP = ((0, 1), (1, 0))


def test_eigenspace_examples():
    assert phi_e_eigenspace(ID2, None, 1).dim == 2
    V = phi_e_eigenspace(SWAP, None, 2)
    assert V.dim == 1 and (1, -1) in V
    assert phi_e_eigenspace(ID2, None, 2).dim == 0


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_eigenspace_dimension_is_phi_multiplicity(n, e):
    from ehclab.exact import euler_phi
    R, F, _ = build_group("GL", n, 2)
    for w in WeylGroup(R).elements:
        mult = factor_into_cyclotomics(torus_order_polynomial(w)).multiplicity(e)
        assert phi_e_eigenspace(w, F, e).dim == mult * euler_phi(e)


def labels(n, e):
    R, F, _ = build_group("GL", n, 2)
    return sorted(L.label for L in enumerate_e_split_levis(R, F, e))


def test_levi_examples():
    assert labels(2, 2) == sorted(["GL₂(q)", "GL₁(q²)"])
    assert len(labels(3, 1)) == 3
    assert labels(3, 2) == sorted(["GL₃(q)", "GL₁(q²)×GL₁(q)"])


def test_closed_form_examples():
    assert sorted(gl_closed_form_pairs(2, 2)) == sorted([(2, ()), (0, (1,))])
    for n0, parts in gl_closed_form_pairs(3, 1):
        assert n0 + sum(parts) == 3
    assert sorted(gl_closed_form_pairs(4, 3)) == sorted([(4, ()), (1, (1,))])
    assert len(gl_closed_form_levis(3, 1)) == 3


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("e", range(1, 5))
def test_weyl_enumeration_matches_closed_form(n, e):
    assert Counter(labels(n, e)) == Counter(gl_closed_form_levis(n, e))


@pytest.mark.parametrize("gtype,n", [("GL", n) for n in range(1, 6)] + [("SL", n) for n in range(2, 5)])
@pytest.mark.parametrize("e", range(1, 5))
def test_every_levi_rederives_and_divides(gtype, n, e):
    R, F, _ = build_group(gtype, n, 3)
    P = order_polynomial(R, F)
    levis = enumerate_e_split_levis(R, F, e)
    assert len(levis[0].roots) == len(R.roots)  # G comes first
    for L in levis:
        assert rederive(R, F, L)
        assert L.order_poly.divides(P)
        assert is_E_split(R, F, L, {e})


def test_is_E_split_examples():
    R, F, _ = build_group("GL", 2, 5)
    l1 = enumerate_e_split_levis(R, F, 1)
    l2 = enumerate_e_split_levis(R, F, 2)
    t_split = next(L for L in l1 if not L.roots)
    t_cox = next(L for L in l2 if not L.roots)
    G = l1[0]
    assert is_E_split(R, F, t_cox, {2})
    assert not is_E_split(R, F, t_split, {2})
    for E in ({1}, {2}, {1, 2}, {3}):
        assert is_E_split(R, F, G, E)
    pc = classify_prime(R, F, 3)
    assert e_ql_split(R, F, t_cox, pc)


def chain_labels(n, e):
    R, F, _ = build_group("GL", n, 2)
    enum = enumerate_chains(R, F, e)
    return [c.labels for c in enum.positive()], enum


def test_chain_examples():
    pos, _ = chain_labels(2, 2)
    assert pos == [("GL₂(q)", "GL₁(q²)")]
    pos, _ = chain_labels(2, 1)
    assert len(pos) == 1 and pos[0][0] == "GL₂(q)"
    pos, enum = chain_labels(3, 1)
    assert len(pos) == 3
    assert sorted(c.length for c in enum.positive()) == [1, 1, 2]
    for c in enum.chains:
        assert c.labels[0] == "GL₃(q)" and all(w for _, w in c.witnesses)


def test_chain_max_len():
    R, F, _ = build_group("GL", 4, 2)
    with pytest.raises(MaxLenExceeded):
        enumerate_chains(R, F, 1, max_len=1)


@given(st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]))
def test_chain_stabiliser_divides_group(ne):
    n, e = ne
    R, F, _ = build_group("GL", n, 3)
    enum = enumerate_chains(R, F, e)
    for c in enum.chains:
        assert enum.stats.group_order % c.stabiliser_order == 0
        assert c.final.order(3) * c.final.relative_weyl_order >= c.stabiliser_order


def _brute_force_chain_count(inst, e):
    """1 (the chain {G}) plus the number of distinct conjugates of each proper e-split torus."""
    G = inst.G
    total = 1
    for kind in inst.proper_levis(e):
        T = frozenset(inst.tori[kind].group.elements)
        total += len({G.conjugate_set(T, g) for g in G.elements})
    return total


@pytest.mark.parametrize("q", [4, 5])
@pytest.mark.parametrize("e", [1, 2])
def test_chain_orbit_stabiliser_matches_concrete_group(q, e):
    inst = rank_one_instance("GL", q)
    R, F, _ = build_group("GL", 2, q)
    enum = enumerate_chains(R, F, e)
    assert enum.stats.total_chains == _brute_force_chain_count(inst, e)
    for c in enum.positive():
        kind = SPLIT if e == 1 else COX
        assert c.stabiliser_order == inst.tori[kind].normaliser.order


def test_alternating_sum_accessor():
    _, enum = chain_labels(3, 1)
    assert enum.alternating_sum(lambda c: 1) == 1 - 2 + 1
    assert enum.alternating_sum(lambda c: 1, include_trivial=False) == -2 + 1
