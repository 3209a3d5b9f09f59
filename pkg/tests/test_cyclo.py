"""Cyclotomic values, valuations, and primitive prime divisors."""

import pytest

from lehmer_ff import (
    FactoringBudgetExceeded,
    InvalidInput,
    UndefinedValuation,
    cyclotomic,
    cyclotomic_eval,
    has_primitive_divisor,
    ord_p,
    primitive_part,
    zsigmondy,
)
from lehmer_ff.cyclo import cyclotomic_eval_pair
from lehmer_ff.intmath import divisors, euler_phi


def test_cyclotomic_known_polynomials():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    assert str(cyclotomic(12)) == "x^4-x^2+1"
    assert str(cyclotomic(1)) == "x-1"


def test_cyclotomic_degree_is_phi():
    for n in range(1, 201):
        assert cyclotomic(n).degree == euler_phi(n)


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(InvalidInput):
        cyclotomic(0)


def test_cyclotomic_coefficient_product_rebuilds_xn_minus_1():
    for n in (1, 2, 6, 30, 105):
        prod = cyclotomic(1)
        from lehmer_ff.cyclo import IntPoly

        prod = IntPoly((1,))
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        expected = [0] * (n + 1)
        expected[0] = -1
        expected[n] = 1
        assert prod.coeffs == tuple(expected)


def test_cyclotomic_eval_examples():
    assert cyclotomic_eval(1, 2) == 1
    assert cyclotomic_eval(2, 3) == 4
    assert cyclotomic_eval(6, 2) == 3


def test_cyclotomic_eval_matches_coefficient_form():
    for n in range(1, 61):
        poly = cyclotomic(n)
        for a in (-3, -2, -1, 0, 1, 2, 5, 10):
            assert cyclotomic_eval(n, a) == poly(a), (n, a)


def test_value_product_identity():
    for n in range(1, 201):
        for a in (2, 3, 10):
            prod = 1
            for d in divisors(n):
                prod *= cyclotomic_eval(d, a)
            assert prod == a**n - 1, (n, a)


def test_homogeneous_values():
    assert cyclotomic_eval_pair(2, 5, 3) == 8
    assert cyclotomic_eval_pair(6, 2, 1) == 3
    for n in range(1, 25):
        for a, b in ((3, 2), (5, 2), (7, 3)):
            prod = 1
            for d in divisors(n):
                prod *= cyclotomic_eval_pair(d, a, b)
            assert prod == a**n - b**n, (n, a, b)


def test_ord_p_examples():
    assert ord_p(2, 80) == 4
    assert ord_p(3, 80) == 0
    assert ord_p(2, cyclotomic_eval(2, 3)) == 2


def test_ord_p_errors():
    with pytest.raises(UndefinedValuation):
        ord_p(2, 0)
    with pytest.raises(InvalidInput):
        ord_p(4, 8)


def test_zsigmondy_exceptional_cases():
    r = zsigmondy(2, 1, 6)
    assert r.primitive_primes == () and r.exception == "N6"
    assert r.primitive_part == 1
    r = zsigmondy(3, 1, 2)
    assert r.primitive_primes == () and r.exception == "POWER_OF_TWO_SUM"
    r = zsigmondy(5, 3, 2)  # 5 + 3 = 8
    assert r.primitive_primes == () and r.exception == "POWER_OF_TWO_SUM"


def test_zsigmondy_generic_cases():
    r = zsigmondy(2, 1, 4)
    assert r.primitive_primes == (5,) and r.primitive_part == 5
    assert r.exception is None
    r = zsigmondy(2, 1, 11)
    assert r.primitive_primes == (23, 89) and r.primitive_part == 2047


def test_zsigmondy_primes_satisfy_definition():
    for a, b, n in ((2, 1, 10), (3, 1, 8), (3, 2, 9), (10, 1, 6), (5, 2, 7)):
        r = zsigmondy(a, b, n)
        value = a**n - b**n
        for p in r.primitive_primes:
            assert value % p == 0
            assert all((a**k - b**k) % p for k in range(1, n))
        assert r.primitive_part == primitive_part(a, b, n)


def test_zsigmondy_validation():
    with pytest.raises(InvalidInput):
        zsigmondy(2, 3, 4)  # a <= b
    with pytest.raises(InvalidInput):
        zsigmondy(4, 2, 4)  # not coprime
    with pytest.raises(InvalidInput):
        zsigmondy(2, 1, 1)  # n < 2


def test_zsigmondy_budget():
    with pytest.raises(FactoringBudgetExceeded):
        zsigmondy(2, 1, 40, factoring_budget=1000)
    # raising the budget makes the same call succeed
    assert zsigmondy(2, 1, 40).primitive_primes == (61681,)


def test_primitive_part_agrees_with_full_classification():
    for a in range(2, 9):
        for b in (1, 2, 3):
            if b >= a or __import__("math").gcd(a, b) != 1:
                continue
            for n in range(2, 13):
                r = zsigmondy(a, b, n)
                m = primitive_part(a, b, n)
                assert r.primitive_part == m, (a, b, n)
                assert bool(r.primitive_primes) == (m > 1)
                assert has_primitive_divisor(a, b, n) == (m > 1)


def test_primitive_part_estimate_window():
    for n in range(7, 61):
        m = primitive_part(2, 1, n)
        phi_val = cyclotomic_eval(n, 2)
        assert m * n >= phi_val
        assert 2 * phi_val >= 2 ** euler_phi(n)
