"""Polynomials over Z[w], w a primitive cube root of unity."""

import random

from qedkit.exactnum import MultiPolynomial, Omega, expand_product

W = Omega(0, 1)          # w
W2 = Omega(-1, -1)       # w^2 = -1 - w
ONE = Omega(1, 0)

X = MultiPolynomial.variable("x")
Y = MultiPolynomial.variable("y")
Z = MultiPolynomial.variable("z")


def conjugate_pair_product() -> MultiPolynomial:
    f1 = MultiPolynomial.linear_combo(ONE, W, W2)
    f2 = MultiPolynomial.linear_combo(ONE, W2, W)
    return expand_product([f1, f2])


def all_nine_factors() -> list[MultiPolynomial]:
    omega_pow = [ONE, W, W2]
    return [MultiPolynomial.linear_combo(ONE, omega_pow[i], omega_pow[j])
            for i in range(3) for j in range(3)]


def test_omega_relation():
    # w^2 + w + 1 = 0
    sq = W * W
    assert sq + W + ONE == Omega(0, 0)


def test_conjugate_pair_expands_to_symmetric_quadratic():
    expected = (X * X + Y * Y + Z * Z) - (X * Y + X * Z + Y * Z)
    assert conjugate_pair_product() == expected


def test_x_times_x():
    assert X * X == MultiPolynomial({(2, 0, 0): (1, 0)})


def nine_factor_target() -> MultiPolynomial:
    cubes = X ** 3 + Y ** 3 + Z ** 3
    return cubes ** 3 - MultiPolynomial.constant(27) * (X ** 3) * (Y ** 3) * (Z ** 3)


def test_nine_factor_product_oracle_at_integer_points():
    # Independent oracle: evaluate all nine factors pointwise in Z[w] and
    # compare with the closed-form target, before trusting the symbolic build.
    rng = random.Random(99)
    factors_coeffs = [(i, j) for i in range(3) for j in range(3)]
    omega_pow = [ONE, W, W2]
    for _ in range(10):
        x, y, z = (rng.randint(-9, 9) for _ in range(3))
        prod = Omega(1, 0)
        for i, j in factors_coeffs:
            term = Omega(x, 0) + omega_pow[i] * Omega(y, 0) + omega_pow[j] * Omega(z, 0)
            prod = prod * term
        cubes = x ** 3 + y ** 3 + z ** 3
        expected = cubes ** 3 - 27 * (x ** 3) * (y ** 3) * (z ** 3)
        assert prod == Omega(expected, 0)


def test_nine_factor_product_symbolic():
    assert expand_product(all_nine_factors()) == nine_factor_target()


def test_nine_factor_leading_coefficient():
    prod = expand_product(all_nine_factors())
    assert prod.coefficient((9, 0, 0)) == (1, 0)


def test_self_conjugate_products_have_real_coefficients():
    rng = random.Random(4)
    omega_pow = [ONE, W, W2]
    for _ in range(12):
        base = [(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(rng.randint(1, 3))]
        factors = []
        for i, j in base:
            factors.append(MultiPolynomial.linear_combo(ONE, omega_pow[i], omega_pow[j]))
            factors.append(MultiPolynomial.linear_combo(ONE, omega_pow[-i % 3], omega_pow[-j % 3]))
        prod = expand_product(factors)
        assert prod.is_real()
        assert prod == prod.conjugate()


def test_evaluate_matches_terms():
    p = conjugate_pair_product()
    assert p.evaluate(1, 2, 3) == (1 + 4 + 9 - 2 - 3 - 6, 0)


def test_grlex_order_is_deterministic():
    p = X * Y + Z ** 2 + X ** 2 + Y
    assert list(p.terms.keys()) == [(2, 0, 0), (1, 1, 0), (0, 0, 2), (0, 1, 0)]
