"""Arithmetic in a tower of real quadratic extensions of the rationals.

An element is either a ``Fraction`` or an ``Ext`` node ``(level, a, b)``
standing for ``a + b*sqrt(radicand(level))`` with ``a``, ``b`` built from
strictly lower levels.  Levels form one process-wide, append-only registry:
each structurally new radicand is adjoined once and reused afterwards.

Signs are decided by recursive case analysis on the components.  The analysis
only uses that ``sqrt`` means the nonnegative root, so it stays correct even
if a radicand happens to be a perfect square in the field below it; radicand
deduplication merely keeps representations small.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

__all__ = [
    "Elem",
    "Ext",
    "NegativeSqrtError",
    "add",
    "bounds",
    "div",
    "mul",
    "neg",
    "radicand",
    "sign",
    "sqrt",
    "sub",
]


class NegativeSqrtError(ArithmeticError):
    """Square root requested for a provably negative value."""


_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


class Ext:
    """One node of the tower: ``a + b * sqrt(radicand(level))``, ``b != 0``."""

    __slots__ = ("level", "a", "b", "_sign")

    def __init__(self, level: int, a: "Elem", b: "Elem") -> None:
        self.level = level
        self.a = a
        self.b = b
        self._sign: Optional[int] = None

    def __repr__(self) -> str:  # debugging aid only
        return f"Ext({self.level}, {self.a!r}, {self.b!r})"


Elem = Union[Fraction, Ext]

# Registry of adjoined radicands.  _radicands[k] is the radicand of level k,
# an Elem using only levels < k, with strictly positive value.
_radicands: list[Elem] = []
_registry: dict[tuple, int] = {}
_lock = threading.Lock()

# Primes used to pull square factors out of rational radicands.
_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97]


def radicand(level: int) -> Elem:
    return _radicands[level]


def _key(x: Elem) -> tuple:
    if isinstance(x, Fraction):
        return ("q", x.numerator, x.denominator)
    return ("e", x.level, _key(x.a), _key(x.b))


def _top(x: Elem) -> int:
    return x.level if isinstance(x, Ext) else -1


def _split(x: Elem, level: int) -> tuple[Elem, Elem]:
    if isinstance(x, Ext) and x.level == level:
        return x.a, x.b
    return x, _ZERO


def _make(level: int, a: Elem, b: Elem) -> Elem:
    if isinstance(b, Fraction) and not b:
        return a
    return Ext(level, a, b)


def add(x: Elem, y: Elem) -> Elem:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x + y
    if isinstance(x, Fraction) and not x:
        return y
    if isinstance(y, Fraction) and not y:
        return x
    level = max(_top(x), _top(y))
    a1, b1 = _split(x, level)
    a2, b2 = _split(y, level)
    return _make(level, add(a1, a2), add(b1, b2))


def neg(x: Elem) -> Elem:
    if isinstance(x, Fraction):
        return -x
    return Ext(x.level, neg(x.a), neg(x.b))


def sub(x: Elem, y: Elem) -> Elem:
    return add(x, neg(y))


def mul(x: Elem, y: Elem) -> Elem:
    if isinstance(x, Fraction):
        if isinstance(y, Fraction):
            return x * y
        if not x:
            return _ZERO
        return Ext(y.level, mul(x, y.a), mul(x, y.b))
    if isinstance(y, Fraction):
        return mul(y, x)
    lx, ly = x.level, y.level
    if lx > ly:
        return Ext(lx, mul(x.a, y), mul(x.b, y))
    if ly > lx:
        return Ext(ly, mul(y.a, x), mul(y.b, x))
    r = _radicands[lx]
    a = add(mul(x.a, y.a), mul(mul(x.b, y.b), r))
    b = add(mul(x.a, y.b), mul(x.b, y.a))
    return _make(lx, a, b)


def _inv(x: Elem) -> Elem:
    if isinstance(x, Fraction):
        if not x:
            raise ZeroDivisionError("division by exact zero")
        return 1 / x
    # 1/(a + b*sqrt(r)) = (a - b*sqrt(r)) / (a^2 - b^2 r) when the norm is
    # nonzero.  A zero norm means a + b*sqrt(r) and a - b*sqrt(r) cannot both
    # be nonzero; if the value itself is nonzero it equals 2a.
    r = _radicands[x.level]
    norm = sub(mul(x.a, x.a), mul(mul(x.b, x.b), r))
    if sign(norm) != 0:
        inv_norm = _inv(norm)
        return _make(x.level, mul(x.a, inv_norm), neg(mul(x.b, inv_norm)))
    if sign(x) == 0:
        raise ZeroDivisionError("division by exact zero")
    return _inv(mul(Fraction(2), x.a))


def div(x: Elem, y: Elem) -> Elem:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        if not y:
            raise ZeroDivisionError("division by exact zero")
        return x / y
    return mul(x, _inv(y))


# ---------------------------------------------------------------------------
# Sign determination
# ---------------------------------------------------------------------------

def _frac_sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def sign(x: Elem) -> int:
    """Exact sign of the real value of ``x`` (-1, 0 or 1)."""
    if isinstance(x, Fraction):
        return _frac_sign(x)
    if x._sign is not None:
        return x._sign
    lo, hi = bounds(x, 64)
    if lo > 0:
        s = 1
    elif hi < 0:
        s = -1
    else:
        s = _sign_exact(x)
    x._sign = s
    return s


def _sign_exact(x: Ext) -> int:
    sa = sign(x.a)
    sb = sign(x.b)
    if sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # Opposite signs: |a| vs |b|*sqrt(r) reduces to a^2 vs b^2 r.
    r = _radicands[x.level]
    t = sign(sub(mul(x.a, x.a), mul(mul(x.b, x.b), r)))
    if t == 0:
        return 0
    return sa * t


# ---------------------------------------------------------------------------
# Square roots
# ---------------------------------------------------------------------------

def _rational_sqrt_parts(q: Fraction) -> tuple[Fraction, int]:
    """Write sqrt(q) = coeff * sqrt(m) with integer m free of small squares.

    Returns (coeff, m); m == 1 means q is a perfect square.
    """
    n, d = q.numerator, q.denominator
    m = n * d
    s = isqrt(m)
    if s * s == m:
        return Fraction(s, d), 1
    k = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > m:
            break
        while m % pp == 0:
            m //= pp
            k *= p
    s = isqrt(m)
    if s * s == m:
        return Fraction(k * s, d), 1
    return Fraction(k, d), m


def _try_structural_sqrt(x: Elem) -> Optional[Elem]:
    """Cheap detector for values that are squares in their own subtower.

    Incomplete by design; a miss only means one more adjoined level.
    """
    if isinstance(x, Fraction):
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        sn, sd = isqrt(n), isqrt(d)
        if sn * sn == n and sd * sd == d:
            return Fraction(sn, sd)
        return None
    # x = a + b*sqrt(r); a square root c + d*sqrt(r) needs
    # s = sqrt(a^2 - b^2 r), c = sqrt((a +/- s)/2), d = b/(2c).
    r = _radicands[x.level]
    n = sub(mul(x.a, x.a), mul(mul(x.b, x.b), r))
    s = _try_structural_sqrt(n)
    if s is None:
        return None
    for s_signed in (s, neg(s)):
        c2 = mul(_HALF, add(x.a, s_signed))
        c = _try_structural_sqrt(c2)
        if c is None or sign(c) == 0:
            continue
        d = div(mul(_HALF, x.b), c)
        cand = _make(x.level, c, d)
        if sign(sub(mul(cand, cand), x)) == 0:
            return cand if sign(cand) >= 0 else neg(cand)
    return None


def _adjoin(rad: Elem) -> int:
    key = _key(rad)
    with _lock:
        lvl = _registry.get(key)
        if lvl is None:
            lvl = len(_radicands)
            _radicands.append(rad)
            _registry[key] = lvl
        return lvl


def sqrt(x: Elem) -> Elem:
    """Nonnegative square root; raises NegativeSqrtError for negative input."""
    s = sign(x)
    if s < 0:
        raise NegativeSqrtError("square root of a negative value")
    if s == 0:
        return _ZERO
    if isinstance(x, Fraction):
        coeff, m = _rational_sqrt_parts(x)
        if m == 1:
            return coeff
        lvl = _adjoin(Fraction(m))
        return Ext(lvl, _ZERO, coeff)
    found = _try_structural_sqrt(x)
    if found is not None:
        return found
    lvl = _adjoin(x)
    return Ext(lvl, _ZERO, Fraction(1))


# ---------------------------------------------------------------------------
# Certified rational brackets
# ---------------------------------------------------------------------------

def _round_down(q: Fraction, prec: int) -> Fraction:
    scaled = q.numerator * (1 << prec)
    d = q.denominator
    return Fraction(scaled // d, 1 << prec)


def _round_up(q: Fraction, prec: int) -> Fraction:
    scaled = q.numerator * (1 << prec)
    d = q.denominator
    return Fraction(-((-scaled) // d), 1 << prec)


def _sqrt_lower(q: Fraction, prec: int) -> Fraction:
    # Largest multiple of 2^-prec whose square is <= q.
    m = (q.numerator << (2 * prec)) // q.denominator
    return Fraction(isqrt(m), 1 << prec)


def _sqrt_upper(q: Fraction, prec: int) -> Fraction:
    m = (q.numerator << (2 * prec)) // q.denominator
    s = isqrt(m)
    if s * s * q.denominator == q.numerator << (2 * prec):
        return Fraction(s, 1 << prec)
    return Fraction(s + 1, 1 << prec)


def bounds(x: Elem, prec: int, _memo: Optional[dict] = None) -> tuple[Fraction, Fraction]:
    """Rational interval containing the value of ``x``, outward-rounded to
    multiples of 2^-prec at every operation."""
    if isinstance(x, Fraction):
        return x, x
    if _memo is None:
        _memo = {}
    got = _memo.get(id(x))
    if got is not None:
        return got
    alo, ahi = bounds(x.a, prec, _memo)
    blo, bhi = bounds(x.b, prec, _memo)
    rlo, rhi = bounds(_radicands[x.level], prec, _memo)
    if rlo < 0:
        rlo = _ZERO  # radicand is positive by construction; clamp rounding
    slo, shi = _sqrt_lower(rlo, prec), _sqrt_upper(rhi, prec)
    products = (blo * slo, blo * shi, bhi * slo, bhi * shi)
    lo = _round_down(alo + min(products), prec)
    hi = _round_up(ahi + max(products), prec)
    _memo[id(x)] = (lo, hi)
    return lo, hi
