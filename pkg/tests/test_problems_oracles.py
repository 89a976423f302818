"""Oracle verifiers: generated instances, classifications, sampled maximality."""

import math
from fractions import Fraction

import pytest

from qedkit.euclid import Point3, coplanarity_defect
from qedkit.problems import (DomainError, InfeasibleSides, LevelsNotAttained,
                             p07_probe, p26_angles, p31_instance, p45_search,
                             p49_compare, p71_probe)
from qedkit.problems.oracles import P07_CATALOG, p07_certificates


def test_p07_constant_consistent():
    assert p07_probe("const_five").classification == "consistent_with_constant"


def test_p07_identity_violates_at_half():
    result = p07_probe("identity", [(0.5, 0.0)])
    assert result.classification == "violation"
    x1, x2, gap, bound = result.witness
    assert (x1, x2) == (0.5, 0.0) and gap == 0.5 and bound == 0.25


def test_p07_sin_violates_near_zero():
    result = p07_probe("sin", [(0.1, 0.0)])
    assert result.classification == "violation"
    _, _, gap, bound = result.witness
    assert gap == pytest.approx(math.sin(0.1)) and bound == pytest.approx(0.01)


def test_p07_catalog_classification():
    assert all(c.passed for c in p07_certificates())


def test_p07_rejects_empty_grid():
    with pytest.raises(DomainError):
        p07_probe("sin", [])


def test_p26_formula_values():
    assert p26_angles(Fraction(150), Fraction(120)) == (60, 30, 90)
    assert p26_angles(Fraction(120), Fraction(120)) == (60, 60, 60)


def test_p26_components_sum_to_180():
    angles = p26_angles(Fraction(101), Fraction(131))
    assert sum(angles) == 180


def test_p26_domain_errors():
    for x, y in ((Fraction(60), Fraction(120)), (Fraction(190), Fraction(80)),
                 (Fraction(170), Fraction(140))):
        with pytest.raises(DomainError):
            p26_angles(x, y)


def test_p31_generated_instance_coplanar():
    quad, certs = p31_instance(7)
    assert all(c.passed for c in certs)
    touch = [Point3(*p) for p in quad.touch_points]
    assert coplanarity_defect(*touch) < 1e-9


def test_p31_planar_rhombus_defect_zero():
    a = math.sqrt(2.0)
    verts = [(a, 0, 0), (0, a, 0), (-a, 0, 0), (0, -a, 0)]
    touch = [Point3((p[0] + q[0]) / 2, (p[1] + q[1]) / 2, 0.0)
             for p, q in zip(verts, verts[1:] + verts[:1])]
    assert coplanarity_defect(*touch) == 0.0


def test_p31_perturbation_detected():
    quad, certs = p31_instance(3)
    perturb_cert = next(c for c in certs if "perturbing" in c.claim.lower())
    assert perturb_cert.passed


def test_p45_radius_three_exhaustive():
    pairs, found, certs = p45_search(3)
    n = 7 * 7
    assert pairs == n * (n - 1)
    assert found == 0
    assert all(c.passed for c in certs)


def test_p45_rejects_bad_radius():
    with pytest.raises(DomainError):
        p45_search(0)


def test_p49_square_and_rectangle():
    square = p49_compare([Fraction(1)] * 4, 200, 1)
    assert all(c.passed for c in square)
    assert any("area = 1," in c.witness for c in square)
    rect = p49_compare([Fraction(3), Fraction(4), Fraction(3), Fraction(4)], 200, 1)
    assert all(c.passed for c in rect)
    brahmagupta = next(c for c in rect if "Brahmagupta" in c.claim)
    assert "area = 12" in brahmagupta.witness


def test_p49_thin_quadrilateral_center_outside():
    # Longest side close to the sum of the others: circumcenter falls outside,
    # exercising the reflex-arc branch of the solver.
    certs = p49_compare([Fraction(1), Fraction(1), Fraction(1), Fraction(5, 2)],
                        200, 2)
    assert all(c.passed for c in certs)


def test_p49_infeasible_sides():
    with pytest.raises(InfeasibleSides):
        p49_compare([Fraction(1), Fraction(1), Fraction(1), Fraction(4)], 10, 0)


def test_p71_linear_minimizer_at_half():
    minimizer, x_star, certs = p71_probe("linear", 0.0, 1.0)
    assert x_star == pytest.approx(0.5)
    assert abs(minimizer - 0.5) <= 1e-4
    assert all(c.passed for c in certs)


def test_p71_cubic_odd_symmetry():
    minimizer, x_star, certs = p71_probe("cubic", -1.0, 1.0)
    assert x_star == pytest.approx(0.0)
    assert abs(minimizer) <= 1e-4


def test_p71_exp_crossing_at_ln2():
    minimizer, x_star, certs = p71_probe("exp", 1.0, 3.0)
    assert x_star == pytest.approx(math.log(2))
    assert abs(minimizer - math.log(2)) <= 1e-4


def test_p71_levels_not_attained():
    with pytest.raises(LevelsNotAttained):
        p71_probe("exp", -1.0, 1.0)
    with pytest.raises(DomainError):
        p71_probe("exp", 3.0, 1.0)
