"""Constructible reals with exact comparison and a certified rational bracket.

``ExactReal`` values are closed under +, -, *, / and ``sqrt``.  Comparisons
are decided exactly in the quadratic tower; the cached interval is refined on
demand (target width halves per step, starting at 1) and is only ever used as
a fast path or for rendering, never as the decision procedure.
"""

from __future__ import annotations

import enum
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Union

from . import tower
from .tower import NegativeSqrtError

__all__ = [
    "ExactReal",
    "NegativeSqrtError",
    "Ordering",
    "RefinementLimitError",
    "compare",
    "sqrt",
]

_MAX_REFINE_STEPS = 4096

RationalLike = Union[int, Fraction, "ExactReal"]


class RefinementLimitError(RuntimeError):
    """Interval refinement exceeded the hard step limit (internal error)."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class ExactReal:
    __slots__ = ("_elem", "_lo", "_hi", "_steps", "_prec")

    def __init__(self, value: Union[int, Fraction, "ExactReal"] = 0) -> None:
        if isinstance(value, ExactReal):
            elem = value._elem
        elif isinstance(value, (int, Fraction)):
            elem = Fraction(value)
        else:
            raise TypeError(f"cannot build ExactReal from {type(value).__name__}")
        self._elem = elem
        self._lo: Fraction | None = None
        self._hi: Fraction | None = None
        self._steps = 0
        self._prec = 4

    @classmethod
    def _wrap(cls, elem: tower.Elem) -> "ExactReal":
        out = cls.__new__(cls)
        out._elem = elem
        out._lo = None
        out._hi = None
        out._steps = 0
        out._prec = 4
        return out

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value: RationalLike) -> tower.Elem:
        if isinstance(value, ExactReal):
            return value._elem
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        return NotImplemented

    def __add__(self, other: RationalLike) -> "ExactReal":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.add(self._elem, rhs))

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "ExactReal":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.sub(self._elem, rhs))

    def __rsub__(self, other: RationalLike) -> "ExactReal":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.sub(lhs, self._elem))

    def __mul__(self, other: RationalLike) -> "ExactReal":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.mul(self._elem, rhs))

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "ExactReal":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.div(self._elem, rhs))

    def __rtruediv__(self, other: RationalLike) -> "ExactReal":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return ExactReal._wrap(tower.div(lhs, self._elem))

    def __neg__(self) -> "ExactReal":
        return ExactReal._wrap(tower.neg(self._elem))

    def __pow__(self, exponent: int) -> "ExactReal":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        acc: tower.Elem = Fraction(1)
        base = self._elem
        n = exponent
        while n:
            if n & 1:
                acc = tower.mul(acc, base)
            base = tower.mul(base, base)
            n >>= 1
        return ExactReal._wrap(acc)

    # -- exact predicates ---------------------------------------------------

    def sign(self) -> int:
        return tower.sign(self._elem)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)  # type: ignore[arg-type]
        if rhs is NotImplemented:
            return NotImplemented
        return tower.sign(tower.sub(self._elem, rhs)) == 0

    def __lt__(self, other: RationalLike) -> bool:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return tower.sign(tower.sub(self._elem, rhs)) < 0

    def __le__(self, other: RationalLike) -> bool:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return tower.sign(tower.sub(self._elem, rhs)) <= 0

    def __gt__(self, other: RationalLike) -> bool:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return tower.sign(tower.sub(self._elem, rhs)) > 0

    def __ge__(self, other: RationalLike) -> bool:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return tower.sign(tower.sub(self._elem, rhs)) >= 0

    __hash__ = None  # type: ignore[assignment]  # exact equality is not hash-friendly

    # -- interval certificate ------------------------------------------------

    def interval(self) -> tuple[Fraction, Fraction]:
        """Current certified bracket; computed at width <= 1 on first use."""
        if self._lo is None:
            self._refine_to(Fraction(1))
        return self._lo, self._hi  # type: ignore[return-value]

    def refine(self) -> tuple[Fraction, Fraction]:
        """Halve the target width of the cached bracket."""
        lo, hi = self.interval()
        target = (hi - lo) / 2
        if target == 0:
            return lo, hi
        return self._refine_to(target)

    def refine_to(self, width: Union[int, Fraction]) -> tuple[Fraction, Fraction]:
        return self._refine_to(Fraction(width))

    def _refine_to(self, width: Fraction) -> tuple[Fraction, Fraction]:
        if self._lo is not None and self._hi - self._lo <= width:
            return self._lo, self._hi
        prec = self._prec
        while True:
            self._steps += 1
            if self._steps > _MAX_REFINE_STEPS:
                raise RefinementLimitError(
                    "interval refinement exceeded 4096 steps")
            lo, hi = tower.bounds(self._elem, prec)
            # Refinement may only shrink the cached bracket.
            if self._lo is not None:
                lo = max(lo, self._lo)
                hi = min(hi, self._hi)
            self._lo, self._hi = lo, hi
            self._prec = prec
            if hi - lo <= width:
                return lo, hi
            prec *= 2

    # -- rendering -----------------------------------------------------------

    def to_fraction(self) -> Fraction:
        """Exact value when rational; raises ValueError otherwise."""
        if isinstance(self._elem, Fraction):
            return self._elem
        raise ValueError("value is irrational")

    @property
    def is_rational(self) -> bool:
        return isinstance(self._elem, Fraction)

    def to_decimal(self, significant: int = 12) -> str:
        """Decimal rendering at the given significant digits, half-even."""
        lo, hi = self._refine_to(Fraction(1, 1 << 80))
        mid = (lo + hi) / 2
        with localcontext() as ctx:
            ctx.prec = significant
            ctx.rounding = ROUND_HALF_EVEN
            d = Decimal(mid.numerator) / Decimal(mid.denominator)
        text = format(d.normalize(), "f")
        return text

    def __float__(self) -> float:
        lo, hi = self._refine_to(Fraction(1, 1 << 80))
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        if isinstance(self._elem, Fraction):
            return f"ExactReal({self._elem})"
        return f"ExactReal(~{float(self):.12g})"


def sqrt(value: RationalLike) -> ExactReal:
    """Exact nonnegative square root of a constructible value."""
    elem = ExactReal._coerce(value)
    if elem is NotImplemented:
        raise TypeError(f"cannot take sqrt of {type(value).__name__}")
    return ExactReal._wrap(tower.sqrt(elem))


def compare(x: RationalLike, y: RationalLike) -> Ordering:
    """Exact ordering of two constructible reals."""
    xe = ExactReal._coerce(x)
    ye = ExactReal._coerce(y)
    if xe is NotImplemented or ye is NotImplemented:
        raise TypeError("compare expects ExactReal-compatible values")
    return Ordering(tower.sign(tower.sub(xe, ye)))
