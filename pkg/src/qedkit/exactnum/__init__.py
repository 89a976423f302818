"""Exact arithmetic kernel: constructible reals, integer polynomials, and
polynomials over the integers adjoined a primitive cube root of unity."""

from fractions import Fraction as BigRational

from .intpoly import (IntPolynomial, coeff_bound, compare_log, digit_count,
                      rational_roots)
from .multipoly import MultiPolynomial, Omega, expand_product
from .real import (ExactReal, NegativeSqrtError, Ordering,
                   RefinementLimitError, compare, sqrt)

__all__ = [
    "BigRational",
    "ExactReal",
    "IntPolynomial",
    "MultiPolynomial",
    "NegativeSqrtError",
    "Omega",
    "Ordering",
    "RefinementLimitError",
    "coeff_bound",
    "compare",
    "compare_log",
    "digit_count",
    "expand_product",
    "rational_roots",
    "sqrt",
]
