"""Integer polynomial certificates: rational roots, digit counts, log orderings."""

import random
from fractions import Fraction

import mpmath
import pytest

from qedkit.exactnum import (IntPolynomial, Ordering, coeff_bound,
                             compare_log, digit_count, rational_roots)


def brute_force_rational_roots(p: IntPolynomial, bound: int = 60) -> set:
    """Independent oracle: try every fraction n/d with |n|, d <= bound."""
    roots = set()
    for d in range(1, bound + 1):
        for n in range(-bound, bound + 1):
            cand = Fraction(n, d)
            if p(cand) == 0:
                roots.add(cand)
    return roots


def test_rational_roots_cubic_without_rational_roots():
    p = IntPolynomial([1, -3, 0, 1])  # x^3 - 3x + 1
    assert rational_roots(p) == set()
    assert p(1) == -1
    assert p(-1) == 3


def test_rational_roots_cubic_with_root_one():
    p = IntPolynomial([1, -2, 0, 1])  # y^3 - 2y + 1
    assert rational_roots(p) == {Fraction(1)}


def test_rational_roots_simple_quadratic():
    p = IntPolynomial([-4, 0, 1])  # x^2 - 4
    assert rational_roots(p) == {Fraction(2), Fraction(-2)}


def test_rational_roots_matches_brute_force_enumeration():
    rng = random.Random(12)
    for _ in range(25):
        coeffs = [rng.randint(-6, 6) for _ in range(rng.randint(2, 5))]
        if not any(coeffs):
            coeffs[0] = 1
        p = IntPolynomial(coeffs)
        if p.is_zero() or p.degree < 1:
            continue
        assert rational_roots(p) == brute_force_rational_roots(p)


def test_rational_roots_with_leading_coefficient():
    p = IntPolynomial([-1, 0, 2])  # 2x^2 - 1: no rational roots
    assert rational_roots(p) == set()
    q = IntPolynomial([-1, 2])  # 2x - 1
    assert rational_roots(q) == {Fraction(1, 2)}


def test_digit_count_values():
    assert digit_count(125 ** 100) == 210
    assert digit_count(10 ** 3) == 4
    # Oracle for 2^300: bracket by powers of ten.
    n = 2 ** 300
    k = 0
    while 10 ** k <= n:
        k += 1
    assert k == 91
    assert digit_count(n) == 91


def test_digit_count_domain():
    with pytest.raises(ValueError):
        digit_count(0)
    with pytest.raises(ValueError):
        digit_count(-5)


def test_compare_log_certificates():
    order, (lhs, rhs) = compare_log(3, 2, 3, 2)
    assert order == Ordering.GREATER and (lhs, rhs) == (9, 8)
    order, (lhs, rhs) = compare_log(5, 3, 3, 2)
    assert order == Ordering.LESS and (lhs, rhs) == (25, 27)
    order, _ = compare_log(4, 2, 2, 1)
    assert order == Ordering.EQUAL


def test_compare_log_agrees_with_high_precision_oracle():
    rng = random.Random(7)
    checked = 0
    with mpmath.workdps(100):
        while checked < 50:
            a = rng.randint(2, 80)
            b = rng.randint(2, 80)
            p = rng.randint(1, 40)
            q = rng.randint(1, 12)
            target = mpmath.log(a) / mpmath.log(b)
            if abs(target - mpmath.mpf(p) / q) <= mpmath.mpf(10) ** -5:
                continue
            expected = Ordering.GREATER if target > mpmath.mpf(p) / q else Ordering.LESS
            order, _ = compare_log(a, b, p, q)
            assert order == expected
            checked += 1


def test_coeff_bound_values():
    p = IntPolynomial([0, -1, 0, 1, 1, -2, -1])  # -t^6 - 2t^5 + t^4 + t^3 - t
    assert coeff_bound(p, Fraction(1, 2)) == Fraction(49, 64)
    assert coeff_bound(IntPolynomial([0, 1]), Fraction(1)) == 1
    assert coeff_bound(IntPolynomial([0, 1, 1]), Fraction(1, 2)) == Fraction(3, 4)


def test_coeff_bound_requires_zero_constant_term():
    with pytest.raises(ValueError):
        coeff_bound(IntPolynomial([1, 1]), Fraction(1))
    with pytest.raises(ValueError):
        coeff_bound(IntPolynomial([0, 1]), Fraction(0))


def test_polynomial_ring_basics():
    p = IntPolynomial([1, 2])
    q = IntPolynomial([-1, 1])
    assert (p * q).coeffs == (-1, -1, 2)
    assert (p + q).coeffs == (0, 3)
    assert (p - p).is_zero()
    assert p(Fraction(1, 2)) == 2
