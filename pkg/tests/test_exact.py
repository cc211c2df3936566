from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from ehclab.errors import DenominatorNotEllIntegral, NotCyclotomicProduct, ZeroInput
from ehclab.exact import (CyclotomicNumber, UniPoly, cyclotomic_polynomial, ell_valuation,
                          euler_phi, factor_into_cyclotomics, make_ell_reduction)

x = UniPoly.x()


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == x - 1
    assert cyclotomic_polynomial(2) == x + 1
    assert cyclotomic_polynomial(6) == x * x - x + 1


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_product_identity(n):
    prod = reduce(lambda a, b: a * b, (cyclotomic_polynomial(d) for d in range(1, n + 1) if n % d == 0))
    assert prod == x ** n - 1
    assert cyclotomic_polynomial(n).degree == euler_phi(n)


def test_factor_examples():
    f = factor_into_cyclotomics(x ** 3 - x)
    assert (f.a, f.factor_map) == (1, {1: 1, 2: 1})
    p = x * (x - 1) ** 2 * (x + 1)
    f = factor_into_cyclotomics(p)
    assert (f.a, f.factor_map) == (1, {1: 2, 2: 1})
    assert p(3) == 48
    f = factor_into_cyclotomics(x * x + x + 1)
    assert (f.a, f.factor_map) == (0, {3: 1})


def test_factor_errors():
    with pytest.raises(ZeroInput):
        factor_into_cyclotomics(UniPoly())
    with pytest.raises(NotCyclotomicProduct):
        factor_into_cyclotomics(x * x + 2)


@given(st.lists(st.integers(1, 30), max_size=8), st.integers(0, 3), st.sampled_from([1, -1]))
def test_factor_round_trip(es, a, unit):
    p = UniPoly.monomial(a, unit)
    for e in es:
        p = p * cyclotomic_polynomial(e)
    if p.degree > 40:
        return
    f = factor_into_cyclotomics(p)
    assert f.expand() == p
    for e in set(es):
        assert f.multiplicity(e) == es.count(e)


def test_ell_valuation_examples():
    assert ell_valuation(480, 3) == 1
    assert ell_valuation(6, 3) == 1
    assert ell_valuation(cyclotomic_polynomial(2)(5), 3) == 1
    with pytest.raises(ZeroInput):
        ell_valuation(0, 3)


def test_cyclo_examples():
    z3 = CyclotomicNumber.zeta(3)
    assert z3 + z3 ** 2 == -1
    z4 = CyclotomicNumber.zeta(4)
    assert z4 * z4 == -1
    z2 = CyclotomicNumber.zeta(2)
    assert z2.embed(6) == CyclotomicNumber.zeta(6, 3)
    assert z2.embed(6) == -1


def test_embedding_preserves_equality():
    a = CyclotomicNumber.zeta(5) + CyclotomicNumber.zeta(5, 4)
    assert a.embed(15) == a.embed(30).embed(60) and a == a.embed(20)
    assert len(a.embed(15).coefficients) == euler_phi(15)


cyc = st.builds(lambda n, cs: CyclotomicNumber.from_root_sum(n, {i: c for i, c in enumerate(cs)}),
                st.sampled_from([1, 3, 4, 5, 8, 12]), st.lists(st.integers(-4, 4), min_size=1, max_size=12))


@given(cyc, cyc, cyc)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not a.is_zero():
        assert (b / a) * a == b


def test_ell_reduction_examples():
    r = make_ell_reduction(4, 3)
    assert r.field_size == 9
    i = r.reduce(CyclotomicNumber.zeta(4))
    assert r.mul(i, i) == r.neg(r.one())
    r = make_ell_reduction(3, 3)
    assert r.reduce(CyclotomicNumber.zeta(3)) == r.one()
    r = make_ell_reduction(8, 7)
    assert r.field_size == 49


def test_ell_reduction_rejects_denominators():
    r = make_ell_reduction(4, 3)
    with pytest.raises(DenominatorNotEllIntegral):
        r.reduce(CyclotomicNumber.from_rational(Fraction(1, 3), 4))


integral = st.builds(lambda cs: CyclotomicNumber.from_root_sum(24, {i: c for i, c in enumerate(cs)}),
                     st.lists(st.integers(-5, 5), min_size=1, max_size=24))


@given(integral, integral, st.sampled_from([5, 7, 3, 2]))
def test_ell_reduction_homomorphism(a, b, ell):
    r = make_ell_reduction(24, ell)
    assert r.reduce(a + b) == r.add(r.reduce(a), r.reduce(b))
    assert r.reduce(a * b) == r.mul(r.reduce(a), r.reduce(b))


@given(st.sampled_from([5, 7, 8, 9, 12]), st.integers(1, 11))
def test_galois_permutes_roots_of_phi(n, k):
    from math import gcd
    import cmath
    if gcd(k, n) != 1:
        return
    phi = cyclotomic_polynomial(n)
    for j in range(n):
        if gcd(j, n) == 1:
            z = cmath.exp(2j * cmath.pi * j * k / n)
            assert abs(sum(c * z ** i for i, c in enumerate(phi.coeffs))) < 1e-9
