"""Exact-certificate verifiers: every claim here is decided with exact
arithmetic; the few numeric certificates are cross-checks at high precision."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import isqrt

import mpmath

from ..config import EVAL_TOL
from ..exactnum import (ExactReal, IntPolynomial, MultiPolynomial, Omega,
                        Ordering, coeff_bound, compare, compare_log,
                        digit_count, expand_product, rational_roots, sqrt)
from .report import Certificate, ExactInterval

__all__ = [
    "p01_certificate",
    "p12_roots",
    "p17_solutions",
    "p38_certificate",
    "p42_points",
    "p52_certificate",
    "p61_digits",
    "p65_identity_check",
]


def _exact(claim: str, passed: bool, witness: str) -> Certificate:
    return Certificate(claim, "exact", witness, passed)


def _numeric(claim: str, passed: bool, witness: str) -> Certificate:
    return Certificate(claim, "numeric", witness, passed)


# ---------------------------------------------------------------------------
# Problem 1: x(8 sqrt(1-x) + sqrt(1+x)) <= 11 sqrt(1+x) - 16 sqrt(1-x)
# ---------------------------------------------------------------------------

def _p01_original_holds(x: Fraction) -> bool:
    xe = ExactReal(x)
    lhs = xe * (8 * sqrt(1 - xe) + sqrt(1 + xe))
    rhs = 11 * sqrt(1 + xe) - 16 * sqrt(1 - xe)
    return lhs <= rhs


def p01_certificate() -> tuple[ExactInterval, list[Certificate]]:
    """Answer interval [3/5, 1] plus the exact certificates behind it."""
    certs: list[Certificate] = []

    # After substituting y = sqrt(1-x)/sqrt(1+x), the inequality becomes
    # (1-y^2)(8y+1) <= (1+y^2)(11-16y); the difference of the sides factors.
    lhs_poly = IntPolynomial([1, 0, 1]) * IntPolynomial([11, -16])
    rhs_poly = IntPolynomial([1, 0, -1]) * IntPolynomial([1, 8])
    diff = lhs_poly - rhs_poly
    factored = IntPolynomial([-1, 2]) * IntPolynomial([-10, 4, -4])
    certs.append(_exact(
        "(1+y^2)(11-16y) - (1-y^2)(8y+1) = (2y-1)(-4y^2+4y-10)",
        diff == factored,
        f"both expand to {list(diff.coeffs)} (lowest degree first)"))

    # -4y^2 + 4y - 10 stays negative on [0, 1]: |4y - 4y^2| <= 8 < 10.
    bound = coeff_bound(IntPolynomial([0, 4, -4]), Fraction(1))
    certs.append(_exact(
        "-4y^2+4y-10 < 0 on [0,1] via coefficient bound",
        bound < 10,
        f"sum |c_i| r^i = {bound} < 10"))

    # Endpoint checks by exact substitution into the original inequality.
    x_lo = Fraction(3, 5)
    y_at_lo = sqrt(1 - ExactReal(x_lo)) / sqrt(1 + ExactReal(x_lo))
    certs.append(_exact(
        "y(3/5) = 1/2 exactly (factor 2y-1 vanishes)",
        compare(y_at_lo, Fraction(1, 2)) == Ordering.EQUAL,
        f"y(3/5) = {y_at_lo.to_decimal()}"))
    certs.append(_exact(
        "inequality holds at x = 3/5 and x = 1",
        _p01_original_holds(x_lo) and _p01_original_holds(Fraction(1)),
        "exact substitution at both endpoints"))
    inside = all(_p01_original_holds(x) for x in
                 (Fraction(2, 3), Fraction(4, 5), Fraction(9, 10)))
    outside = not any(_p01_original_holds(x) for x in
                      (Fraction(0), Fraction(1, 2), Fraction(11, 20)))
    certs.append(_exact(
        "sampled x inside [3/5,1] satisfy; sampled x in [0,3/5) violate",
        inside and outside,
        "x in {2/3, 4/5, 9/10} hold; x in {0, 1/2, 11/20} fail "
        "(at x=0: LHS 0, RHS -5)"))

    interval = ExactInterval(ExactReal(x_lo), ExactReal(1))
    return interval, certs


# ---------------------------------------------------------------------------
# Problem 12: 2 * cbrt(2y - 1) = y^3 + 1
# ---------------------------------------------------------------------------

def p12_roots() -> tuple[list[ExactReal], list[Certificate]]:
    """The three real solutions, each certified after cubing both sides."""
    r5 = sqrt(5)
    roots = [ExactReal(1), (r5 - 1) / 2, (-r5 - 1) / 2]
    certs: list[Certificate] = []

    # Cubing is a bijection on the reals, so y solves the original equation
    # iff (y^3 + 1)^3 = 8(2y - 1).
    all_satisfy = True
    for y in roots:
        lhs = (y ** 3 + 1) ** 3
        rhs = 8 * (2 * y - 1)
        all_satisfy &= compare(lhs, rhs) == Ordering.EQUAL
    certs.append(_exact(
        "each root satisfies (y^3+1)^3 = 8(2y-1) exactly",
        all_satisfy,
        "roots 1, (-1+sqrt5)/2, (-1-sqrt5)/2"))

    non_root = ExactReal(0)
    certs.append(_exact(
        "y = 0 is not a solution",
        compare((non_root ** 3 + 1) ** 3, 8 * (2 * non_root - 1)) != Ordering.EQUAL,
        "1 != -8"))

    fixed_point_cubic = IntPolynomial([1, -2, 0, 1])  # y^3 - 2y + 1
    certs.append(_exact(
        "rational roots of y^3 - 2y + 1 are exactly {1}",
        rational_roots(fixed_point_cubic) == {Fraction(1)},
        "candidates +/-1 tested; y = 1 is a root"))

    # Completeness: the product of the three linear factors reproduces the
    # cubic exactly, so no further real roots exist.
    a, b, c = roots
    e1 = a + b + c
    e2 = a * b + a * c + b * c
    e3 = a * b * c
    product_matches = (e1.is_zero()
                       and compare(e2, Fraction(-2)) == Ordering.EQUAL
                       and compare(e3, Fraction(-1)) == Ordering.EQUAL)
    certs.append(_exact(
        "(y-1)(y-r2)(y-r3) = y^3 - 2y + 1 with exact coefficients",
        product_matches,
        f"elementary symmetric values: {e1.to_decimal()}, "
        f"{e2.to_decimal()}, {e3.to_decimal()}"))
    return roots, certs


# ---------------------------------------------------------------------------
# Problem 17: sin^7 x + 1/sin^3 x = cos^7 x + 1/cos^3 x
# ---------------------------------------------------------------------------

def p17_solutions() -> tuple[str, list[Certificate]]:
    """Solution set x = pi/4 + k*pi, with the two-case certificate."""
    certs: list[Certificate] = []
    s = MultiPolynomial.variable("x")  # stands for sin x
    c = MultiPolynomial.variable("y")  # stands for cos x

    # Case sin = cos: clearing denominators, solutions of the equation are
    # zeros of N = (s^7 - c^7) s^3 c^3 - (s^3 - c^3); s - c divides N.
    n_poly = (s ** 7 - c ** 7) * (s ** 3) * (c ** 3) - (s ** 3 - c ** 3)
    # Remainder of division by (s - c) is N with s replaced by c.
    collapsed: dict = {}
    for (i, j, k), (c0, c1) in n_poly.terms.items():
        key = (0, i + j, k)
        a0, a1 = collapsed.get(key, (0, 0))
        collapsed[key] = (a0 + c0, a1 + c1)
    remainder = MultiPolynomial(collapsed)
    certs.append(_exact(
        "sin x = cos x solves the cleared equation identically",
        remainder.is_zero(),
        "substituting s = c annihilates (s^7-c^7)s^3c^3 - (s^3-c^3)"))

    # Otherwise, with t = sin x cos x, the equation reduces to a polynomial
    # in t; all steps are identities modulo sin^2 + cos^2 = 1.
    pyth_zero = lambda p: p.substitute_sq().is_zero()  # noqa: E731
    t = s * c
    certs.append(_exact(
        "sin^4+cos^4 = 1-2t^2 and sin^6+cos^6 = 1-3t^2 (mod sin^2+cos^2=1)",
        pyth_zero(s ** 4 + c ** 4 - (MultiPolynomial.constant(1) - 2 * t * t))
        and pyth_zero(s ** 6 + c ** 6 - (MultiPolynomial.constant(1) - 3 * (t * t))),
        "exact reduction by the Pythagorean relation"))

    geom = (c ** 6 + (c ** 5) * s + (c ** 4) * (s ** 2) + (c ** 3) * (s ** 3)
            + (c ** 2) * (s ** 4) + c * (s ** 5) + s ** 6)
    t_form = (MultiPolynomial.constant(1) + t - 2 * (t ** 2) - t ** 3)
    certs.append(_exact(
        "degree-6 symmetric sum equals 1 + t - 2t^2 - t^3",
        pyth_zero(geom - t_form),
        "exact reduction by the Pythagorean relation"))
    certs.append(_exact(
        "numerator sum equals 1 + t",
        pyth_zero((c ** 2 + c * s + s ** 2)
                  - (MultiPolynomial.constant(1) + t)),
        "exact reduction by the Pythagorean relation"))

    # (1+t)/t^3 = 1 + t - 2t^2 - t^3 clears to the sextic below.
    sextic = IntPolynomial([-1, -1, 0, 1, 1, -2, -1])  # -t^6-2t^5+t^4+t^3-t-1
    cleared = (IntPolynomial([0, 0, 0, 1]) * IntPolynomial([1, 1, -2, -1])
               - IntPolynomial([1, 1]))
    certs.append(_exact(
        "clearing denominators yields -t^6-2t^5+t^4+t^3-t-1 = 0",
        cleared == sextic,
        f"coefficients {list(sextic.coeffs)} (lowest degree first)"))

    bound = coeff_bound(IntPolynomial([0, -1, 0, 1, 1, -2, -1]), Fraction(1, 2))
    certs.append(_exact(
        "|{-t^6-2t^5+t^4+t^3-t}| <= 49/64 < 1 for |t| <= 1/2",
        bound == Fraction(49, 64) and bound < 1,
        "1/64 + 1/16 + 1/16 + 1/8 + 1/2 = 49/64, so the sextic misses 0"))

    with mpmath.workdps(50):
        def side_gap(xv):
            return abs((mpmath.sin(xv) ** 7 + 1 / mpmath.sin(xv) ** 3)
                       - (mpmath.cos(xv) ** 7 + 1 / mpmath.cos(xv) ** 3))
        at_pi4 = side_gap(mpmath.pi / 4)
        at_pi3 = side_gap(mpmath.pi / 3)
    certs.append(_numeric(
        "x = pi/4 solves the equation; x = pi/3 does not",
        at_pi4 < EVAL_TOL and at_pi3 > 1e-3,
        f"|gap(pi/4)| = {mpmath.nstr(at_pi4, 3)}, |gap(pi/3)| = {mpmath.nstr(at_pi3, 3)}"))

    return "x = pi/4 + k*pi", certs


# ---------------------------------------------------------------------------
# Problem 38: sin 10 degrees is irrational
# ---------------------------------------------------------------------------

def p38_certificate() -> list[Certificate]:
    certs: list[Certificate] = []
    p = IntPolynomial([1, -3, 0, 1])  # x^3 - 3x + 1
    certs.append(_exact(
        "x^3 - 3x + 1 has no rational roots",
        rational_roots(p) == set(),
        f"all candidate roots divide the constant term; p(1) = {p(1)}, "
        f"p(-1) = {p(-1)}"))
    with mpmath.workdps(50):
        x0 = 2 * mpmath.sin(mpmath.radians(10))
        residual = abs(x0 ** 3 - 3 * x0 + 1)
        triple = abs(3 * mpmath.sin(mpmath.radians(10))
                     - 4 * mpmath.sin(mpmath.radians(10)) ** 3
                     - mpmath.mpf(1) / 2)
    certs.append(_numeric(
        "2 sin(10 deg) is a root of x^3 - 3x + 1 (50-digit check)",
        residual < EVAL_TOL,
        f"|p(2 sin 10)| = {mpmath.nstr(residual, 3)}"))
    certs.append(_numeric(
        "triple-angle identity at 10 degrees (50-digit check)",
        triple < EVAL_TOL,
        f"|3 sin10 - 4 sin^3 10 - 1/2| = {mpmath.nstr(triple, 3)}"))
    return certs


# ---------------------------------------------------------------------------
# Problem 42: six points, pairwise integer distances, no three collinear
# ---------------------------------------------------------------------------

P42_POINTS = [(25, 0), (-25, 0), (7, 24), (7, -24), (-7, 24), (-7, -24)]


def p42_points() -> tuple[list[tuple[int, int]], list[Certificate]]:
    certs: list[Certificate] = []
    distances = []
    all_integer = True
    for (x1, y1), (x2, y2) in combinations(P42_POINTS, 2):
        d2 = (x1 - x2) ** 2 + (y1 - y2) ** 2
        root = isqrt(d2)
        if root * root != d2:
            all_integer = False
        distances.append(root)
    certs.append(_exact(
        "all 15 pairwise distances are integers",
        all_integer and len(distances) == 15,
        "distances: " + ", ".join(str(d) for d in sorted(distances))))

    no_collinear = True
    for (x1, y1), (x2, y2), (x3, y3) in combinations(P42_POINTS, 3):
        cross = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
        if cross == 0:
            no_collinear = False
    certs.append(_exact(
        "no three of the six points are collinear",
        no_collinear,
        "all 20 triples have nonzero cross product"))
    return P42_POINTS, certs


# ---------------------------------------------------------------------------
# Problem 52: log_2 3 vs log_3 5
# ---------------------------------------------------------------------------

def p52_certificate() -> list[Certificate]:
    certs: list[Certificate] = []
    first, (l1, r1) = compare_log(3, 2, 3, 2)
    certs.append(_exact(
        "log_2 3 > 3/2",
        first == Ordering.GREATER and (l1, r1) == (9, 8),
        f"3^2 = {l1} > {r1} = 2^3"))
    second, (l2, r2) = compare_log(5, 3, 3, 2)
    certs.append(_exact(
        "log_3 5 < 3/2",
        second == Ordering.LESS and (l2, r2) == (25, 27),
        f"5^2 = {l2} < {r2} = 3^3"))
    certs.append(_exact(
        "hence log_2 3 > log_3 5",
        first == Ordering.GREATER and second == Ordering.LESS,
        "both compare against 3/2"))
    with mpmath.workdps(50):
        log23 = mpmath.log(3) / mpmath.log(2)
        log35 = mpmath.log(5) / mpmath.log(3)
        agrees = log23 > 1.5 > log35
    certs.append(_numeric(
        "50-digit evaluation agrees",
        bool(agrees),
        f"log_2 3 = {mpmath.nstr(log23, 12)}, log_3 5 = {mpmath.nstr(log35, 12)}"))
    return certs


# ---------------------------------------------------------------------------
# Problem 61: number of digits of 125^100
# ---------------------------------------------------------------------------

def p61_digits() -> tuple[int, list[Certificate]]:
    certs: list[Certificate] = []
    n = 125 ** 100
    digits = digit_count(n)
    certs.append(_exact(
        "125^100 has 210 digits",
        digits == 210,
        f"exact digit count = {digits}"))
    ratio = Fraction(1024, 1000) ** 30
    certs.append(_exact(
        "1 < (1024/1000)^30 < 10",
        1 < ratio < 10,
        f"(1024/1000)^30 = {float(ratio):.6f} as exact rational"))
    certs.append(_exact(
        "125^100 = 10^210 / 1.024^30 exactly",
        Fraction(10) ** 210 / ratio == n,
        "identity over exact rationals"))
    return digits, certs


# ---------------------------------------------------------------------------
# Problem 65: rationalizing 1/(cbrt a + cbrt b + cbrt c)
# ---------------------------------------------------------------------------

def p65_identity_check() -> list[Certificate]:
    certs: list[Certificate] = []
    x = MultiPolynomial.variable("x")
    y = MultiPolynomial.variable("y")
    z = MultiPolynomial.variable("z")
    one = Omega(1, 0)
    w = Omega(0, 1)
    w2 = Omega(-1, -1)
    omega_pow = [one, w, w2]

    factors = [MultiPolynomial.linear_combo(one, omega_pow[i], omega_pow[j])
               for i in range(3) for j in range(3)]
    trivial = MultiPolynomial.linear_combo(one, one, one)
    nontrivial = [f for f in factors if f != trivial]
    product = expand_product(nontrivial) * trivial
    cubes = x ** 3 + y ** 3 + z ** 3
    target = cubes ** 3 - MultiPolynomial.constant(27) * (x ** 3) * (y ** 3) * (z ** 3)
    certs.append(_exact(
        "(x+y+z) times the eight conjugate factors = (x^3+y^3+z^3)^3 - 27x^3y^3z^3",
        product == target and product.is_real(),
        "exact expansion over Z[w]; all w-components cancel"))
    certs.append(_exact(
        "leading coefficient of x^9 is 1",
        product.coefficient((9, 0, 0)) == (1, 0),
        "graded-lex leading term"))

    pair = expand_product([
        MultiPolynomial.linear_combo(one, w, w2),
        MultiPolynomial.linear_combo(one, w2, w)])
    sym = (x * x + y * y + z * z) - (x * y + x * z + y * z)
    certs.append(_exact(
        "(x+wy+w^2z)(x+w^2y+wz) = x^2+y^2+z^2-xy-xz-yz",
        pair == sym,
        "exact expansion over Z[w]"))
    three_term = trivial * sym
    cube_diff = cubes - MultiPolynomial.constant(3) * (x * y * z)
    certs.append(_exact(
        "(x+y+z)(x^2+y^2+z^2-xy-yz-xz) = x^3+y^3+z^3-3xyz",
        three_term == cube_diff,
        "exact expansion"))
    at_123 = three_term.evaluate(1, 2, 3)
    certs.append(_exact(
        "spot value at (1,2,3): 6*(14-11) = 18 = 36-18",
        at_123 == (18, 0) and cube_diff.evaluate(1, 2, 3) == (18, 0),
        f"both sides evaluate to {at_123[0]}"))

    # Final rationalization step: (s - u)(s^2 + su + u^2) = s^3 - u^3, with u
    # standing for the remaining cube root.
    s_var, u_var = x, y
    final = (s_var - u_var) * (s_var * s_var + s_var * u_var + u_var * u_var)
    certs.append(_exact(
        "(s-u)(s^2+su+u^2) = s^3-u^3",
        final == s_var ** 3 - u_var ** 3,
        "exact expansion; substituting u = cbrt(t) clears the last radical"))

    with mpmath.workdps(40):
        a, b, c = 1, 8, 27
        xa, yb, zc = (mpmath.cbrt(v) for v in (a, b, c))
        direct = 1 / (xa + yb + zc)
        displayed = ((xa ** 2 + yb ** 2 + zc ** 2 - xa * yb - xa * zc - yb * zc)
                     / (a + b + c - 3 * mpmath.cbrt(a * b * c)))
        gap = abs(direct - displayed)
        sixth = abs(direct - mpmath.mpf(1) / 6)
    certs.append(_numeric(
        "displayed rationalized form matches 1/(1+2+3) = 1/6 at (1,8,27)",
        gap < EVAL_TOL and sixth < EVAL_TOL,
        f"|direct - displayed| = {mpmath.nstr(gap, 3)}"))
    return certs
