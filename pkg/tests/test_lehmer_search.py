"""Partition divisibility, exponent maps, bounds, and candidate degrees."""

from fractions import Fraction

import pytest

from lehmer_ff import (
    InvalidInput,
    Partition,
    abundancy,
    c_factor,
    candidate_degrees,
    classify_a_ge_3,
    exponent_map,
    mersenne_divisibility,
    partitions_of,
    verify_prop36,
)
from lehmer_ff.lehmer_search import prop36_partition_allowed
from lehmer_ff.suites import (
    divisibility_structure_violations,
    exponent_map_violations,
)

# the inequality-based filter, recomputed at 35 and 60 digits (identical):
# it admits 28 and 36 as well, both of which the refined filter rejects
COARSE_TRUE = set(range(7, 23)) | {24, 26, 28, 30, 34, 36, 38, 42, 46, 50, 54}
REFINED_TRUE = {8, 9, 10, 12, 14, 18, 20, 24, 30}


def test_partition_validation():
    Partition((1, 1, 2))
    with pytest.raises(InvalidInput):
        Partition((3,))  # s >= 2
    with pytest.raises(InvalidInput):
        Partition((2, 1))  # not nondecreasing
    with pytest.raises(InvalidInput):
        Partition((0, 2))


def test_partition_accessors():
    part = Partition((1, 2, 2, 3))
    assert part.n == 8 and part.s == 4
    assert part.multiplicity(2) == 2
    assert str(part) == "(1,2,2,3)"


def test_partitions_of_counts_and_order():
    parts4 = list(partitions_of(4))
    assert parts4 == [(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3)]
    # colex: ordered by largest part, so streams shard by that prefix
    largest = [p[-1] for p in parts4]
    assert largest == sorted(largest)
    # p(n) minus the single-part partition
    assert len(list(partitions_of(10))) == 42 - 1
    assert list(partitions_of(1)) == []


def test_mersenne_divisibility_examples():
    assert mersenne_divisibility(3, Partition((1, 1)))  # 4 | 8
    assert mersenne_divisibility(3, Partition((1, 1, 1, 1)))  # 16 | 80
    assert mersenne_divisibility(2, Partition((1, 2, 3)))  # 21 | 63
    assert not mersenne_divisibility(4, Partition((1, 1)))  # 9 does not divide 15


def test_classify_a_ge_3_full_window():
    found = classify_a_ge_3(8, 10)
    assert {(a, p.parts) for a, p in found} == {(3, (1, 1)), (3, (1, 1, 1, 1))}


def test_classify_a_ge_3_small_window():
    found = classify_a_ge_3(3, 2)
    assert [(a, p.parts) for a, p in found] == [(3, (1, 1))]


def test_classify_fixed_point_under_larger_bounds():
    small = {(a, p.parts) for a, p in classify_a_ge_3(8, 10)}
    large = {(a, p.parts) for a, p in classify_a_ge_3(10, 12)}
    assert small == large


def test_no_solutions_for_base_4_alone():
    for n in range(2, 4):
        for parts in partitions_of(n):
            assert not mersenne_divisibility(4, Partition(parts))


def test_exponent_map_examples():
    em = exponent_map(4, Partition((1, 1, 2)))
    assert em.exponents == {1: -2, 2: 0, 4: 1}
    em = exponent_map(2, Partition((1, 1)))
    assert em.exponents == {1: -1, 2: 1}
    em = exponent_map(6, Partition((1, 2, 3)))
    assert em.exponents == {1: -2, 2: 0, 3: 0, 6: 1}
    assert em.positive_divisors == {6}
    assert em.denominator_multiset == {}


def test_exponent_map_structure():
    em = exponent_map(6, Partition((2, 4)))  # part 4 does not divide 6
    assert em.exponents == {1: -1, 2: -1, 3: 1, 4: -1, 6: 1}
    assert em.denominator_multiset == {2: 1, 4: 1}
    assert em.positive_divisors == {3, 6}


def test_exponent_map_value_is_the_quotient():
    em = exponent_map(6, Partition((1, 2, 3)))
    assert em.value(2) == Fraction(63, 21)
    assert em.value(2).denominator == 1
    em = exponent_map(4, Partition((2, 2)))
    assert em.value(2) == Fraction(15, 9)


def test_exponent_map_requires_matching_sum():
    with pytest.raises(InvalidInput):
        exponent_map(5, Partition((1, 1)))


def test_exponent_map_consistency_small():
    assert exponent_map_violations(n_max=12) == []


def test_divisibility_forces_dividing_parts():
    assert divisibility_structure_violations(n_max=16) == []


def test_abundancy_examples():
    assert abundancy(1) == 1
    assert abundancy(6) == 2
    assert abundancy(30) == Fraction(12, 5)
    with pytest.raises(InvalidInput):
        abundancy(0)


def test_c_factor_examples():
    assert c_factor(2) == Fraction(59, 100)
    assert c_factor(8) == Fraction(84, 100)
    assert c_factor(9) == 1
    assert c_factor(4) == Fraction(70, 100)
    assert c_factor(16) == 1
    with pytest.raises(InvalidInput):
        c_factor(1)


def test_prop36_multiplicity_caps():
    assert prop36_partition_allowed(Partition((1, 1, 2)))
    assert not prop36_partition_allowed(Partition((1, 1, 1)))  # u_1 = 3
    assert not prop36_partition_allowed(Partition((2, 2, 4)))  # u_2 = 2 > 3/2
    assert prop36_partition_allowed(Partition((3, 3)))  # u_3 = 2 <= 7/3


def test_verify_prop36_windows():
    assert {(n, p.parts) for n, p in verify_prop36(30)} == {
        (2, (1, 1)),
        (4, (1, 1, 2)),
        (6, (1, 2, 3)),
    }
    assert [(n, p.parts) for n, p in verify_prop36(2)] == [(2, (1, 1))]
    assert {(n, p.parts) for n, p in verify_prop36(5)} == {
        (2, (1, 1)),
        (4, (1, 1, 2)),
    }


def test_candidate_degrees_refined_set():
    _, refined = candidate_degrees(200)
    assert refined == REFINED_TRUE


def test_candidate_degrees_coarse_set_matches_inequality():
    coarse, _ = candidate_degrees(200)
    assert coarse == COARSE_TRUE


def test_candidate_degrees_empty_beyond_54():
    coarse, refined = candidate_degrees(400)
    assert max(coarse) == 54
    assert max(refined) == 30


def test_candidate_degrees_stable_across_precision():
    assert candidate_degrees(120, dps=30) == candidate_degrees(120, dps=50)


def test_candidate_degrees_validation():
    with pytest.raises(InvalidInput):
        candidate_degrees(5)
    with pytest.raises(InvalidInput):
        candidate_degrees(100, dps=10)


def test_marginal_comparison_raises_precision_alert(monkeypatch):
    import lehmer_ff.lehmer_search as mod
    from lehmer_ff import PrecisionAlert

    monkeypatch.setattr(mod, "PRECISION_GAP", Fraction(10))
    with pytest.raises(PrecisionAlert):
        candidate_degrees(20)
