"""Dense univariate polynomials over the integers, plus the integer
certificates that ride on them (rational roots, digit counts, logarithm
comparisons, coefficient bounds)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .real import ExactReal, Ordering

__all__ = [
    "IntPolynomial",
    "coeff_bound",
    "compare_log",
    "digit_count",
    "rational_roots",
]


class IntPolynomial:
    """Integer coefficients, lowest degree first; leading coefficient nonzero
    unless the polynomial is zero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction/ExactReal arguments."""
        if isinstance(x, ExactReal):
            acc: object = ExactReal(0)
        else:
            acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_out_root_zero(self) -> tuple[int, "IntPolynomial"]:
        """Split p = x^k * q with q(0) != 0; returns (k, q)."""
        k = 0
        cs = list(self.coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
            k += 1
        return k, IntPolynomial(cs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p: IntPolynomial) -> set[Fraction]:
    """Exactly the rational roots of a nonzero integer polynomial.

    Candidates are +/- (divisor of the constant term) / (divisor of the
    leading coefficient), each confirmed by exact evaluation.
    """
    if p.is_zero():
        raise ValueError("rational_roots requires a nonzero polynomial")
    zeros, q = p.shift_out_root_zero()
    roots: set[Fraction] = set()
    if zeros:
        roots.add(Fraction(0))
    if q.degree < 1:
        return roots
    constant = q.coeffs[0]
    leading = q.coeffs[-1]
    for num in _divisors(constant):
        for den in _divisors(leading):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and q(cand) == 0:
                    roots.add(cand)
    return roots


def digit_count(n: int) -> int:
    """Number of base-10 digits of a positive integer, computed exactly."""
    if n <= 0:
        raise ValueError("digit_count requires n >= 1")
    return len(str(n))


def compare_log(a: int, b: int, p: int, q: int) -> tuple[Ordering, tuple[int, int]]:
    """Exact ordering of log_b(a) against p/q, with the integer certificate.

    Valid because x -> b**x and x -> x**q are strictly increasing, so
    log_b(a) vs p/q is decided by a**q vs b**p.  Returns the ordering and
    the two compared integers (a**q * b**max(0,-p) vs b**max(0,p)).
    """
    if a <= 1 or b <= 1:
        raise ValueError("compare_log requires a > 1 and b > 1")
    if q <= 0:
        raise ValueError("compare_log requires q > 0")
    lhs = a ** q
    rhs = b ** p if p >= 0 else 1
    if p < 0:
        lhs *= b ** (-p)
    if lhs > rhs:
        return Ordering.GREATER, (lhs, rhs)
    if lhs < rhs:
        return Ordering.LESS, (lhs, rhs)
    return Ordering.EQUAL, (lhs, rhs)


def coeff_bound(p: IntPolynomial, r: Fraction) -> Fraction:
    """Exact bound sum(|c_i| * r^i) for |p(t)| on [-r, r]; needs p(0) = 0."""
    if r <= 0:
        raise ValueError("coeff_bound requires r > 0")
    if p.coeffs and p.coeffs[0] != 0:
        raise ValueError("coeff_bound requires a zero constant term")
    r = Fraction(r)
    total = Fraction(0)
    power = Fraction(1)
    for i, c in enumerate(p.coeffs):
        if i:
            power *= r
        if c:
            total += abs(c) * power
    return total
