import pytest
from hypothesis import given

from conftest import generator_tuples, small_p
from psemigroups import (
    PreconditionError,
    frobenius_p,
    genus_p,
    is_minimal_generator_system,
    sylvester_sum_p,
    verify_gcd_scaling,
    verify_johnson,
    verify_watanabe,
)


def test_minimality():
    assert is_minimal_generator_system((4, 5, 6))
    assert not is_minimal_generator_system((8, 4, 5, 6))
    assert is_minimal_generator_system((2, 3))
    assert is_minimal_generator_system((17, 18, 19))


def test_johnson_golden_columns():
    # scaled column must be 3 * unscaled + 16 throughout
    scaled = [frobenius_p((8, 12, 15, 18), p) for p in range(11)]
    unscaled = [frobenius_p((8, 4, 5, 6), p) for p in range(11)]
    assert scaled == [3 * g + 16 for g in unscaled]
    for p in range(11):
        assert verify_johnson(8, 3, (4, 5, 6), p).passed


def test_johnson_genus_golden():
    report = verify_johnson(8, 3, (4, 5, 6), 8)
    assert report.passed
    assert report.lhs["genus"] == 85 == 3 * 26 + 7


def test_johnson_beta_one_degenerates():
    report = verify_johnson(8, 1, (4, 5, 6), 3)
    assert report.passed
    assert report.lhs == report.rhs


def test_johnson_preconditions():
    with pytest.raises(PreconditionError):
        verify_johnson(4, 3, (4, 5, 6), 0)  # alpha equals a base generator
    with pytest.raises(PreconditionError):
        verify_johnson(8, 2, (4, 5, 6), 0)  # alpha, beta not coprime
    with pytest.raises(PreconditionError):
        verify_johnson(7, 3, (4, 5, 6), 0)  # alpha outside the base semigroup
    with pytest.raises(PreconditionError):
        verify_johnson(8, 3, (8, 4, 5, 6), 0)  # base not minimal
    with pytest.raises(PreconditionError):
        verify_johnson(8, 3, (5, 6, 7), 0)  # 8 not representable over {5,6,7}


def test_watanabe_golden():
    report = verify_watanabe(8, 3, (4, 5, 6), 8)
    assert report.passed
    assert report.lhs == {"symmetric": True, "multiplicity": 72}
    assert report.rhs == {"symmetric": True, "multiplicity": 72}


def test_watanabe_beta_one_degenerates():
    report = verify_watanabe(8, 1, (4, 5, 6), 2)
    assert report.passed and report.lhs == report.rhs


def test_watanabe_across_p_range():
    for p in range(11):
        assert verify_watanabe(8, 3, (4, 5, 6), p).passed


def test_gcd_scaling_golden_8form():
    report = verify_gcd_scaling((8, 12, 15, 18), 8)
    assert report.passed
    assert report.lhs["frobenius"] == 97 == 3 * 27 + 2 * 8
    assert report.lhs["genus"] == 85 == 3 * 26 + 7
    assert report.lhs["sylvester_sum"] == 3618 == 9 * 328 + 24 * 26 + 42
    assert report.extras["sylvester_sum_denominator_2_variant"] == 3828
    assert "12" in report.note


def test_gcd_scaling_golden_546():
    report = verify_gcd_scaling((5, 4, 6), 0)
    assert report.passed
    assert report.lhs["frobenius"] == 7 == 2 * 1 + 5
    assert report.lhs["genus"] == 4 == 2 * 1 + 2
    assert report.lhs["sylvester_sum"] == 13 == 4 + 5 + 4


def test_gcd_scaling_apery_relation_uses_first_generator_as_modulus():
    report = verify_gcd_scaling((5, 4, 6), 0)
    assert report.lhs["apery"] == [0, 4, 6, 8, 12]
    assert report.rhs["apery"] == [2 * x for x in (0, 2, 3, 4, 6)]


def test_gcd_scaling_preconditions():
    with pytest.raises(PreconditionError):
        verify_gcd_scaling((17, 18, 19), 0)  # gcd of the tail is 1
    with pytest.raises(PreconditionError):
        verify_gcd_scaling((3, 2, 4), 0)  # tail/d drops below 2


def test_printed_denominator_2_variant_fails_enumeration():
    # the denominator-2 form of the quadratic scaling term would predict
    # 3828 here, while the enumerated gap sum is 3618
    report = verify_gcd_scaling((8, 12, 15, 18), 8)
    assert report.extras["sylvester_sum_denominator_2_variant"] != report.lhs["sylvester_sum"]


def test_generator_dropping_reduction_only_valid_at_p_zero():
    # 5 = 2 + 3 is redundant for the generated semigroup, so dropping it
    # keeps p = 0 values; at higher p its representations change the counts
    assert frobenius_p((2, 5, 3), 0) == frobenius_p((2, 3), 0) == 1
    assert frobenius_p((2, 5, 3), 1) == 4
    assert frobenius_p((2, 3), 1) == 7
    assert frobenius_p((2, 5, 3), 1) != frobenius_p((2, 3), 1)


def test_johnson_specializes_gcd_scaling():
    # scaling the base of {alpha} u B by beta is the tail-gcd scaling of
    # {alpha} u beta*B with d = beta
    for p in range(5):
        johnson = verify_johnson(8, 3, (4, 5, 6), p)
        scaling = verify_gcd_scaling((8, 12, 15, 18), p)
        assert johnson.passed and scaling.passed
        assert johnson.lhs["frobenius"] == scaling.lhs["frobenius"]
        assert johnson.lhs["genus"] == scaling.lhs["genus"]


@given(gens=generator_tuples(max_value=14, max_size=3), p=small_p)
def test_scaled_tail_instances_satisfy_gcd_scaling(gens, p):
    # build {a1} u 2*rest from any small instance whose first entry is odd
    first, rest = gens[0], gens[1:]
    if first % 2 == 0:
        first += 1
    scaled = (first, *(2 * x for x in rest))
    if len(set(scaled)) != len(scaled):
        return
    try:
        report = verify_gcd_scaling(scaled, p)
    except PreconditionError:
        return
    assert report.passed


@given(p=small_p)
def test_gcd_scaling_consistency_with_direct_values(p):
    report = verify_gcd_scaling((8, 12, 15, 18), p)
    assert report.passed
    assert report.lhs["frobenius"] == frobenius_p((8, 12, 15, 18), p)
    assert report.lhs["genus"] == genus_p((8, 12, 15, 18), p)
    assert report.lhs["sylvester_sum"] == sylvester_sum_p((8, 12, 15, 18), p)
