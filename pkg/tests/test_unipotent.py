from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from ehclab.exact import ell_valuation
from ehclab.unipotent import (
    block_defects, bfs_cores, conjugate, e_core, e_quotient, from_core_quotient, hook_lengths,
    multipartitions, order_polynomial_gl, partitions_of, series_count_identity,
    symmetric_group_degree, unipotent_block_partition, unipotent_defect, unipotent_degree,
)

# number of partitions p(n), n = 0..12
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(13)] == PARTITION_COUNTS


def test_core_examples():
    cq = e_quotient((3,), 2)
    assert cq.core == (1,) and cq.weight == 1
    assert e_core((2, 1), 2) == (2, 1)
    assert e_quotient((2, 1), 2).weight == 0
    for lam in partitions_of(5):
        assert e_core(lam, 1) == ()


def test_hooks_and_conjugate():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert conjugate((3, 1)) == (2, 1, 1)


def test_degree_examples():
    assert unipotent_degree((1, 1))(7) == 7
    assert unipotent_degree((4,))(3) == 1
    # Steinberg degree q^{n(n-1)/2}
    assert unipotent_degree((1, 1, 1))(2) == 8
    assert unipotent_degree((2, 1))(2) == 6


@pytest.mark.parametrize("n", range(1, 8))
def test_degree_at_one_is_symmetric_group_degree(n):
    for lam in partitions_of(n):
        assert unipotent_degree(lam).at_one() == symmetric_group_degree(lam)


def test_sum_of_squares_need_not_divide_group_order():
    # GL_2(2): 1 + 2^2 = 5 does not divide 6
    assert sum(unipotent_degree(lam)(2) ** 2 for lam in partitions_of(2)) == 5


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("q", [2, 3])
def test_sum_of_squares_bounded_by_group_order(n, q):
    order = order_polynomial_gl(n)(q)
    s = sum(unipotent_degree(lam)(q) ** 2 for lam in partitions_of(n))
    assert s <= order
    for lam in partitions_of(n):
        assert order_polynomial_gl(n)(q) % unipotent_degree(lam)(q) == 0


def test_defect_example():
    # l = 3 divides Phi_2(2) = 3; (2,1) has degree q(q+1) and is in a defect-zero block
    assert unipotent_defect((2, 1), 2, 3) == 0


def test_defect_rejects_two_and_wrong_e():
    with pytest.raises(ValueError):
        unipotent_defect((2,), 3, 2)
    with pytest.raises(ValueError):
        unipotent_defect((2,), 2, 3, e=1)


def test_block_partition_example():
    part = unipotent_block_partition(3, 2)
    assert part == {(2, 1): [(2, 1)], (1,): [(3,), (1, 1, 1)]}


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("e", range(1, 5))
def test_series_count_identity(n, e):
    items = series_count_identity(n, e)
    assert all(it.ok for it in items)
    assert sum(it.characters for it in items) == PARTITION_COUNTS[n]


def test_multipartition_counts():
    # number of bipartitions of w: 1, 2, 5, 10, 20
    assert [len(multipartitions(w, 2)) for w in range(5)] == [1, 2, 5, 10, 20]


@settings(max_examples=150)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.integers(1, 5))))
def test_core_matches_rim_hook_oracle(data):
    lam, e = data
    assert bfs_cores(lam, e) == {e_core(lam, e)}


@settings(max_examples=150)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.integers(1, 5))))
def test_core_quotient_round_trip(data):
    lam, e = data
    cq = e_quotient(lam, e)
    assert cq.size == sum(lam)
    assert from_core_quotient(cq.core, cq.quotient, e) == lam


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("e", range(1, 5))
def test_core_quotient_is_a_bijection(n, e):
    for core, members in unipotent_block_partition(n, e).items():
        w = (n - sum(core)) // e
        quots = {e_quotient(lam, e).quotient for lam in members}
        assert len(quots) == len(members) == len(multipartitions(w, e))


@pytest.mark.parametrize("n,q,ell", [(n, q, ell) for n in range(1, 8) for q, ell in
                                     [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (4, 3), (4, 5), (5, 3)]])
def test_defect_constant_below_ell(n, q, ell):
    for core, (w, defects) in block_defects(n, q, ell).items():
        if w < ell:
            assert len(set(defects)) == 1, (core, defects)


def test_defects_can_vary_at_large_weight():
    w, defects = block_defects(6, 2, 3)[()]
    assert w == 3 and len(set(defects)) > 1


@pytest.mark.parametrize("n,q,ell", [(5, 2, 3), (6, 3, 5), (6, 2, 7), (5, 4, 5)])
def test_symbolic_defect_matches_integer(n, q, ell):
    order = order_polynomial_gl(n)(q)
    for lam in partitions_of(n):
        d = unipotent_defect(lam, q, ell)
        assert d == ell_valuation(order, ell) - ell_valuation(unipotent_degree(lam)(q), ell)
