"""Totient formula vs. brute-force oracle, membership, and sweeps."""

import pytest

from lehmer_ff import (
    InvalidInput,
    OracleOverflow,
    Poly,
    enumerate_polys,
    factor,
    field_make,
    is_lehmer,
    lehmer_set,
    parse_poly,
    totient,
    totient_bruteforce,
    totient_report,
)
from lehmer_ff.suites import expected_lehmer_monic, hit_structure_violations


def P(spec, text):
    return parse_poly(spec, text)


def test_totient_known_values(f2, f3):
    assert totient(P(f2, "x^4+x")) == 3  # x(x+1)(x^2+x+1)
    assert totient(P(f3, "x^2+x")) == 4  # x(x+1)
    assert totient(P(f2, "x^2")) == 2


def test_totient_of_irreducibles_is_q_deg_minus_1(f2, f3, f4):
    for spec, text in ((f2, "x^3+x+1"), (f3, "x^2+1"), (f4, "x^2+x+t")):
        f = P(spec, text)
        from lehmer_ff import is_irreducible

        assert is_irreducible(f)
        assert totient(f) == spec.q ** f.degree - 1


def test_totient_requires_positive_degree(f2):
    with pytest.raises(InvalidInput):
        totient(Poly.one(f2))
    with pytest.raises(InvalidInput):
        totient_bruteforce(Poly.zero(f2))


def test_totient_unit_invariant(f3):
    for f in enumerate_polys(f3, 3, monic_only=True):
        for u in f3.units():
            assert totient(f * u) == totient(f)


def test_bruteforce_examples(f2, f3):
    assert totient_bruteforce(P(f2, "x^2+x")) == 1  # only g = 1 is coprime
    assert totient_bruteforce(P(f3, "x^2+x")) == 4
    assert totient_bruteforce(P(f2, "x^2+x+1")) == 3


def test_bruteforce_counts_directly(f2):
    # x^2 over F_2: of the residues 0, 1, x, x+1 exactly {1, x+1} are coprime
    from lehmer_ff import poly_gcd

    f = P(f2, "x^2")
    residues = [Poly.one(f2), P(f2, "x"), P(f2, "x+1")]
    coprime = [g for g in residues if poly_gcd(f, g) == Poly.one(f2)]
    assert [str(g) for g in coprime] == ["1", "x+1"]
    assert totient_bruteforce(f) == 2
    assert totient(f) == 2


def test_bruteforce_cap():
    f7 = field_make(7)
    with pytest.raises(OracleOverflow):
        totient_bruteforce(P(f7, "x^9+1"))


@pytest.mark.parametrize("q,max_deg", [(2, 6), (3, 4), (4, 4)])
def test_oracle_equivalence_exhaustive(q, max_deg, f2, f3, f4):
    spec = {2: f2, 3: f3, 4: f4}[q]
    for n in range(1, max_deg + 1):
        for f in enumerate_polys(spec, n, monic_only=True):
            assert totient(f) == totient_bruteforce(f), str(f)


def test_is_lehmer_examples(f2):
    in_script, in_l, _ = is_lehmer(P(f2, "x^2+x"))
    assert (in_script, in_l) == (True, True)
    in_script, in_l, _ = is_lehmer(P(f2, "x^2+x+1"))
    assert (in_script, in_l) == (True, False)
    in_script, in_l, _ = is_lehmer(P(f2, "x^3+x^2+x"))  # x(x^2+x+1), phi = 3
    assert (in_script, in_l) == (False, False)


def test_report_fields(f2):
    report = totient_report(P(f2, "x^4+x"))
    assert report.phi == 3
    assert report.modulus_value == 15
    assert report.divides and report.reducible
    rec = report.as_record()
    assert rec["q"] == 2 and rec["degree"] == 4
    assert rec["phi"] == "3" and rec["modulus_value"] == "15"
    assert rec["factors"] == [["x", 1], ["x+1", 1], ["x^2+x+1", 1]]


def test_report_divides_iff_modulus_multiple(f3):
    for f in enumerate_polys(f3, 3, monic_only=True):
        rep = totient_report(f)
        assert rep.divides == (rep.modulus_value % rep.phi == 0)
        assert rep.reducible == (rep.factorization.total_multiplicity >= 2)


def test_lehmer_set_f3_monic_and_expanded(f3):
    monic = lehmer_set(f3, 8)
    assert {str(f) for f in monic} == {"x^2+x", "x^2+2*x", "x^2+2"}
    expanded = lehmer_set(f3, 8, expand_units=True)
    expected = {
        str(parse_poly(f3, t))
        for t in (
            "x^2+x", "2*x^2+2*x",
            "x^2+2*x", "2*x^2+x",
            "x^2+2", "2*x^2+1",
        )
    }
    assert {str(f) for f in expanded} == expected
    keys = [f.sort_key() for f in expanded]
    assert keys == sorted(keys)


def test_lehmer_set_f2(f2, lehmer_sets):
    hits = lehmer_sets[2]
    assert set(hits) == expected_lehmer_monic(f2)
    assert len(hits) == 6


def test_lehmer_set_empty_for_larger_fields(lehmer_sets):
    assert lehmer_sets[4] == []
    assert lehmer_sets[5] == []


def test_lehmer_set_matches_per_poly_filter(f3):
    swept = set(lehmer_set(f3, 4))
    direct = set()
    for n in range(1, 5):
        for f in enumerate_polys(f3, n, monic_only=True):
            if is_lehmer(f)[1]:
                direct.add(f)
    assert swept == direct


def test_lehmer_set_workers_merge_deterministically(f3):
    assert lehmer_set(f3, 6, workers=2) == lehmer_set(f3, 6)


def test_unit_membership_invariance(f2, f3, f4):
    for spec in (f2, f3, f4):
        for n in range(1, 4):
            for f in enumerate_polys(spec, n, monic_only=True):
                _, in_l, _ = is_lehmer(f)
                for u in spec.units():
                    assert is_lehmer(f * u)[1] == in_l


def test_hits_are_squarefree_with_dividing_degrees(lehmer_sets):
    from lehmer_ff import field_from_order

    for q, hits in lehmer_sets.items():
        for f in hits:
            fac = factor(f)
            assert fac.is_squarefree()
            assert all(f.degree % p.degree == 0 for p, _ in fac.factors)
        assert hit_structure_violations(field_from_order(q), hits) == []
