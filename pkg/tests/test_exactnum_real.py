"""Exact constructible-real arithmetic: comparisons, intervals, field laws."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from qedkit.exactnum import (ExactReal, NegativeSqrtError, Ordering, compare,
                             sqrt)


def test_compare_nested_radical_equality():
    # (sqrt2 + sqrt3)^2 = 5 + 2*sqrt6
    assert compare(sqrt(2) + sqrt(3), sqrt(5 + 2 * sqrt(6))) == Ordering.EQUAL


def test_compare_identical_rationals():
    assert compare(Fraction(3, 5), Fraction(3, 5)) == Ordering.EQUAL


def test_compare_sqrt2_against_decimal_truncation():
    # Oracle: digit extraction by integer square root.  isqrt(2*10^16) is the
    # floor of sqrt(2)*10^8; strict inequality certifies the ordering.
    from math import isqrt
    approx_scaled = 141421356
    assert approx_scaled == isqrt(2 * 10 ** 16)
    assert approx_scaled ** 2 < 2 * 10 ** 16
    assert compare(sqrt(2), Fraction(approx_scaled, 10 ** 8)) == Ordering.GREATER


def test_sqrt_negative_rejected():
    with pytest.raises(NegativeSqrtError):
        sqrt(-2)
    with pytest.raises(NegativeSqrtError):
        sqrt(ExactReal(1) - 2)


def test_sqrt_zero_and_perfect_squares():
    assert sqrt(0).is_zero()
    assert sqrt(49) == 7
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)


def test_division_by_exact_zero_raises():
    zero = sqrt(8) - 2 * sqrt(2)
    assert zero.is_zero()
    with pytest.raises(ZeroDivisionError):
        _ = ExactReal(1) / zero


def test_interval_is_monotone_under_refinement():
    x = sqrt(2) + sqrt(3) / 7
    lo1, hi1 = x.refine_to(Fraction(1, 2))
    lo2, hi2 = x.refine_to(Fraction(1, 2 ** 40))
    assert lo1 <= lo2 <= hi2 <= hi1
    assert hi2 - lo2 <= Fraction(1, 2 ** 40)


def test_interval_soundness_against_200_digit_oracle():
    # Fixed-point evaluation at 200 digits brackets the truth well inside
    # any interval the kernel certifies.
    cases = [
        sqrt(2),
        sqrt(2) + sqrt(3),
        (1 - sqrt(5)) / 2,
        sqrt(7) * sqrt(11) - 2,
        1 / (3 + sqrt(2)),
    ]
    with mpmath.workdps(200):
        oracle = [
            mpmath.sqrt(2),
            mpmath.sqrt(2) + mpmath.sqrt(3),
            (1 - mpmath.sqrt(5)) / 2,
            mpmath.sqrt(7) * mpmath.sqrt(11) - 2,
            1 / (3 + mpmath.sqrt(2)),
        ]
        slack = mpmath.mpf(10) ** -195
        for x, v in zip(cases, oracle):
            lo, hi = x.refine_to(Fraction(1, 2 ** 60))
            assert mpmath.mpf(lo.numerator) / lo.denominator <= v + slack
            assert mpmath.mpf(hi.numerator) / hi.denominator >= v - slack


constructible = st.deferred(lambda: st.one_of(
    st.integers(-12, 12).map(ExactReal),
    st.fractions(min_value=-10, max_value=10, max_denominator=16).map(ExactReal),
    st.tuples(constructible, constructible).map(lambda ab: ab[0] + ab[1]),
    st.tuples(constructible, constructible).map(lambda ab: ab[0] * ab[1]),
    constructible.map(lambda a: sqrt(a * a)),  # |a|, keeps sqrt operands >= 0
))


@settings(max_examples=40, deadline=None)
@given(constructible, constructible, constructible)
def test_field_laws_under_exact_compare(a, b, c):
    assert compare(a + b, b + a) == Ordering.EQUAL
    assert compare(a * (b + c), a * b + a * c) == Ordering.EQUAL


@settings(max_examples=40, deadline=None)
@given(constructible)
def test_sqrt_square_roundtrip(a):
    mag = sqrt(a * a)
    root = sqrt(mag)
    assert compare(root * root, mag) == Ordering.EQUAL


@settings(max_examples=30, deadline=None)
@given(constructible, constructible)
def test_compare_is_antisymmetric(a, b):
    assert compare(a, b) == -compare(b, a)


def test_ordering_values():
    assert compare(ExactReal(1), ExactReal(2)) == Ordering.LESS
    assert compare(ExactReal(2), ExactReal(1)) == Ordering.GREATER
    assert int(Ordering.LESS) == -1 and int(Ordering.GREATER) == 1


def test_to_decimal_significant_digits():
    assert (sqrt(3) / 2).to_decimal() == "0.866025403784"
    assert ExactReal(Fraction(1, 2)).to_decimal() == "0.5"
