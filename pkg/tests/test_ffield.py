"""Field construction, arithmetic axioms, and the element text form."""

import pytest

from lehmer_ff import (
    DivisionByZero,
    FieldMismatch,
    InvalidDegree,
    InvalidPrime,
    ParseError,
    field_inv,
    field_make,
)
from lehmer_ff.ffield import _element_parse, _element_str, field_from_order

AXIOM_FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)]


def brute_min_irreducible_quadratic(p):
    """Oracle: smallest-encoding monic quadratic over F_p with no root."""
    best = None
    for code in range(p * p):
        c0, c1 = code % p, code // p
        if all((x * x + c1 * x + c0) % p for x in range(p)):
            best = (c0, c1, 1)
            break
    return best


def test_field_make_f4_modulus():
    assert field_make(2, 2).modulus == (1, 1, 1)  # t^2 + t + 1


def test_field_make_f9_modulus_matches_enumeration_oracle():
    assert field_make(3, 2).modulus == brute_min_irreducible_quadratic(3)
    assert field_make(3, 2).modulus == (1, 0, 1)  # t^2 + 1


def test_field_make_prime_field_has_no_modulus():
    assert field_make(5, 1).modulus is None


def test_field_make_validation():
    with pytest.raises(InvalidPrime):
        field_make(4)
    with pytest.raises(InvalidPrime):
        field_make(1)
    with pytest.raises(InvalidDegree):
        field_make(2, 0)
    with pytest.raises(InvalidDegree):
        field_make(2, 17)  # q > 2^16


def test_field_make_deterministic():
    from lehmer_ff.ffield import _field_make_cached

    a = field_make(3, 2)
    _field_make_cached.cache_clear()
    b = field_make(3, 2)
    assert a.modulus == b.modulus
    assert a == b
    assert field_make(3) is field_make(3, 1)  # default k interns identically


def test_field_from_order():
    assert field_from_order(9).q == 9
    assert field_from_order(8).k == 3
    with pytest.raises(InvalidPrime):
        field_from_order(12)


def test_field_inv_examples(f4, f5):
    assert field_inv(f5, f5.element(2)) == f5.element(3)
    t = f4.element("t")
    assert field_inv(f4, t) == f4.element("t+1")
    assert field_inv(f4, f4.one) == f4.one


def test_inverse_of_zero_raises(f5):
    with pytest.raises(DivisionByZero):
        f5.zero.inverse()


@pytest.mark.parametrize("p,k", AXIOM_FIELDS)
def test_field_axioms_exhaustive(p, k):
    spec = field_make(p, k)
    els = list(spec.elements())
    for a in els:
        assert a + spec.zero == a
        assert a * spec.one == a
        assert a + (-a) == spec.zero
        if not a.is_zero():
            assert a * a.inverse() == spec.one
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,k", AXIOM_FIELDS)
def test_frobenius_and_group_order(p, k):
    spec = field_make(p, k)
    q = spec.q
    for a in spec.elements():
        assert a**q == a
        if not a.is_zero():
            assert a ** (q - 1) == spec.one


@pytest.mark.parametrize("p,k", AXIOM_FIELDS + [(3, 3), (2, 5)])
def test_element_text_roundtrip(p, k):
    spec = field_make(p, k)
    for a in spec.elements():
        assert spec.element(str(a)) == a


def test_element_text_examples(f4, f9):
    assert str(f4.element("t+1")) == "t+1"
    assert str(f9.from_coeffs([2, 1])) == "t+2"
    assert str(f9.zero) == "0"
    assert _element_str(f9, _element_parse(f9, "2*t+1")) == "2*t+1"


def test_element_parse_rejects_garbage(f4):
    with pytest.raises(ParseError):
        f4.element("u+1")
    with pytest.raises(ParseError):
        f4.element("t^5")  # exponent beyond k-1
    with pytest.raises(ParseError):
        f4.element("")


def test_elements_of_different_fields_do_not_mix(f4, f5):
    with pytest.raises(FieldMismatch):
        f4.element("t") + f5.element(2)


def test_coeffs_view(f9):
    a = f9.from_coeffs([2, 1])  # 2 + t
    assert a.coeffs == (2, 1)
    assert f9.element(a.coeffs).val == a.val


def test_spec_pickles_by_parameters(f4):
    import pickle

    clone = pickle.loads(pickle.dumps(f4))
    assert clone is field_make(2, 2)
