from math import prod

import pytest
import sympy

from ehclab.errors import EllDividesQ, TwistedUnsupported, UnsupportedType
from ehclab.exact import UniPoly, factor_into_cyclotomics
from ehclab.groups import materialise
from ehclab.rootdatum import (FrobeniusAction, WeylGroup, build_group, classify_prime,
                              hypothesis_3_3_check, multiplicative_order_e, order_polynomial,
                              torus_order_polynomial, weyl_group)

x = UniPoly.x()


def test_build_group_examples():
    R, F, D = build_group("GL", 2, 5)
    assert R.rank == 2 and set(R.roots) == {(1, -1), (-1, 1)}
    R, F, D = build_group("SL", 2, 4)
    assert R.rank == 1 and R.n_positive == 1
    assert weyl_group("GL", 3).order == 6
    with pytest.raises(UnsupportedType):
        build_group("SO", 3, 5)


@pytest.mark.parametrize("gtype,n", [("GL", n) for n in range(1, 7)] + [("SL", n) for n in range(2, 7)])
def test_root_datum_axioms_and_weyl_order(gtype, n):
    R, F, D = build_group(gtype, n, 2)
    for a, c in zip(R.roots, R.coroots):
        assert R.pairing(a, c) == 2
    assert R.n_positive * 2 == len(R.roots)
    W = weyl_group(gtype, n)
    assert W.order == prod(R.degrees) == sympy.factorial(n)
    # double dual (the ambient coordinates are only a labelling aid)
    DD = D.dual_datum.dual()
    assert (DD.type_label, DD.roots, DD.coroots, DD.simple) == (R.type_label, R.roots, R.coroots, R.simple)


def test_order_polynomial_examples():
    R, F, _ = build_group("GL", 2, 3)
    P = order_polynomial(R, F)
    assert P == x * (x - 1) * (x * x - 1)
    assert factor_into_cyclotomics(P).factor_map == {1: 2, 2: 1}
    R, F, _ = build_group("SL", 2, 3)
    assert order_polynomial(R, F) == x * (x * x - 1)
    swap = ((0, 1), (1, 0))
    assert torus_order_polynomial(swap) == x * x - 1


def test_twisted_order_rejected():
    R, F, _ = build_group("GL", 2, 3)
    twisted = FrobeniusAction(3, 3, ((0, 1), (1, 0)))
    with pytest.raises(TwistedUnsupported):
        order_polynomial(R, twisted)


@pytest.mark.parametrize("gtype,n,q", [("GL", 2, q) for q in (2, 3, 4, 5)] + [("SL", 2, q) for q in (3, 4, 5)]
                         + [("GL", 3, 2)])
def test_order_polynomial_matches_brute_force(gtype, n, q):
    R, F, _ = build_group(gtype, n, q)
    assert order_polynomial(R, F)(q) == materialise(gtype, n, q).order


@pytest.mark.parametrize("gtype,n", [("GL", 2), ("GL", 3), ("GL", 4), ("SL", 2), ("SL", 3), ("SL", 4)])
def test_torus_orders_divide_group_order(gtype, n):
    R, F, _ = build_group(gtype, n, 2)
    P = order_polynomial(R, F)
    for w in WeylGroup(R).elements:
        assert torus_order_polynomial(w, F).divides(P)


def test_multiplicative_order_examples():
    assert multiplicative_order_e(5, 3) == 2
    assert multiplicative_order_e(5, 2) == 1
    assert multiplicative_order_e(4, 3) == 1
    with pytest.raises(EllDividesQ):
        multiplicative_order_e(9, 3)


def test_classify_prime_examples():
    R, F, _ = build_group("GL", 2, 5)
    pc = classify_prime(R, F, 3)
    assert pc.good and pc.in_gamma and pc.large and pc.e0 == 2 and pc.e == 2
    assert not classify_prime(R, F, 2).in_gamma
    R, F, _ = build_group("SL", 2, 5)
    with pytest.raises(EllDividesQ):
        classify_prime(R, F, 5)


@pytest.mark.parametrize("gtype,n,q", [("GL", 2, 3), ("GL", 2, 4), ("GL", 2, 5), ("GL", 3, 2), ("GL", 3, 3),
                                       ("SL", 2, 4), ("SL", 2, 5), ("SL", 3, 2), ("GL", 4, 2)])
def test_large_implies_gamma(gtype, n, q):
    R, F, _ = build_group(gtype, n, q)
    for ell in sympy.primerange(2, 51):
        if q % ell == 0:
            continue
        pc = classify_prime(R, F, ell)
        if pc.large:
            assert pc.in_gamma, (gtype, n, q, ell, pc.gamma_failures)


def test_hypothesis_3_3_examples():
    R, F, _ = build_group("GL", 2, 5)
    ok, reasons = hypothesis_3_3_check(R, F, 3)
    assert not ok and any("5" in r for r in reasons)
    R, F, _ = build_group("GL", 2, 11)
    assert hypothesis_3_3_check(R, F, 5) == (True, [])
    R, F, _ = build_group("GL", 3, 2)
    assert hypothesis_3_3_check(R, F, 7) == (True, [])
