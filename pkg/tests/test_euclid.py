"""Exact planar kernel: intersections, projections, rotations, tangents."""

import math
import random
from fractions import Fraction

import pytest

from qedkit.euclid import (Circle, CoincidentObjects, Line, NoIntersection,
                           Point, Point3, PointInsideCircle, PointOnCircle,
                           RotationDirection, Selector, TangentCountMismatch,
                           coplanarity_defect, distance_sq,
                           foot_of_perpendicular, incircle_tangent_points,
                           intersect, midpoint, rotate60, tangent_line_from)
from qedkit.exactnum import ExactReal, Ordering, compare, sqrt

X_AXIS = Line.through(Point.of(0, 0), Point.of(1, 0))
Y_AXIS = Line.through(Point.of(0, 0), Point.of(0, 1))
UNIT = Circle(Point.of(0, 0), ExactReal(1))


def test_axes_intersect_at_origin():
    p = intersect(X_AXIS, Y_AXIS, Selector.ONLY)
    assert p.same_as(Point.of(0, 0))


def test_parallel_lines_do_not_intersect():
    with pytest.raises(NoIntersection):
        intersect(X_AXIS, X_AXIS.parallel_through(Point.of(0, 1)))
    with pytest.raises(CoincidentObjects):
        intersect(X_AXIS, Line.through(Point.of(2, 0), Point.of(5, 0)))


def test_unit_circle_meets_x_axis():
    first = intersect(UNIT, X_AXIS, Selector.FIRST)
    second = intersect(UNIT, X_AXIS, Selector.SECOND)
    assert first.same_as(Point.of(-1, 0))
    assert second.same_as(Point.of(1, 0))
    with pytest.raises(TangentCountMismatch):
        intersect(UNIT, X_AXIS, Selector.ONLY)


def test_tangent_line_single_point():
    tangent = X_AXIS.parallel_through(Point.of(0, 1))
    p = intersect(UNIT, tangent, Selector.ONLY)
    assert p.same_as(Point.of(0, 1))
    with pytest.raises(TangentCountMismatch):
        intersect(UNIT, tangent, Selector.SECOND)


def test_two_circles_tangent_externally():
    # Hand expansion: squared-distance 2500 = (5 + 45)^2 / ... with r = 5 each,
    # centers 50 apart, the circles touch only at (25, 0).
    c1 = Circle(Point.of(0, 0), ExactReal(625))
    c2 = Circle(Point.of(50, 0), ExactReal(625))
    p = intersect(c1, c2, Selector.ONLY)
    assert p.same_as(Point.of(25, 0))


def test_concentric_and_identical_circles():
    with pytest.raises(NoIntersection):
        intersect(UNIT, Circle(Point.of(0, 0), ExactReal(4)))
    with pytest.raises(CoincidentObjects):
        intersect(UNIT, Circle(Point.of(0, 0), ExactReal(1)))


def test_distance_sq_values():
    assert distance_sq(Point.of(25, 0), Point.of(7, 24)) == 900  # 18^2 + 24^2
    assert distance_sq(Point.of(3, 4), Point.of(3, 4)).is_zero()
    assert distance_sq(Point.of(0, 0), Point.of(3, 4)) == 25


def test_rotate60_unit_vector():
    img = rotate60(Point.of(1, 0), Point.of(0, 0), RotationDirection.CCW)
    assert img.x == Fraction(1, 2)
    assert img.y == sqrt(3) / 2


def test_rotate60_fixes_center():
    c = Point.of(Fraction(17, 3), -2)
    assert rotate60(c, c, RotationDirection.CCW).same_as(c)


def test_rotate60_six_times_is_identity():
    # Oracle: six-fold composition must return the start point exactly.
    p = Point.of(Fraction(17, 3), -2)
    q = p
    for _ in range(6):
        q = rotate60(q, Point.of(0, 0), RotationDirection.CCW)
    assert q.same_as(p)


def test_rotate60_preserves_distances():
    rng = random.Random(3)
    for _ in range(8):
        p = Point.of(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                     Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        q = Point.of(rng.randint(-9, 9), rng.randint(-9, 9))
        center = Point.of(rng.randint(-3, 3), rng.randint(-3, 3))
        rp = rotate60(p, center, RotationDirection.CW)
        rq = rotate60(q, center, RotationDirection.CW)
        assert compare(distance_sq(rp, rq), distance_sq(p, q)) == Ordering.EQUAL


def test_foot_of_perpendicular_cases():
    assert foot_of_perpendicular(Point.of(3, 4), X_AXIS).same_as(Point.of(3, 0))
    on_line = Point.of(7, 0)
    assert foot_of_perpendicular(on_line, X_AXIS).same_as(on_line)
    diag = Line(ExactReal(1), ExactReal(1), ExactReal(0))  # x + y = 0
    assert foot_of_perpendicular(Point.of(1, 1), diag).same_as(Point.of(0, 0))


def test_foot_is_incident_and_perpendicular():
    l = Line.through(Point.of(1, 2), Point.of(4, -3))
    p = Point.of(-2, 5)
    foot = foot_of_perpendicular(p, l)
    assert l.contains(foot)
    drop = Line.through(p, foot)
    assert drop.is_perpendicular_to(l)


def test_foot_minimizes_sampled_distance():
    l = Line.through(Point.of(0, 1), Point.of(3, 2))
    p = Point.of(1, -2)
    foot = foot_of_perpendicular(p, l)
    best = float(distance_sq(p, foot))
    for i in range(100):
        t = Fraction(i - 50, 10)
        sample = Point.of(3 * t, 1 + t)
        assert float(distance_sq(p, sample)) >= best - 1e-12


def test_incircle_right_angle():
    circle, a, b = incircle_tangent_points(
        Point.of(0, 0), Point.of(1, 0), Point.of(0, 1), ExactReal(1))
    assert circle.center.same_as(Point.of(1, 1))
    assert circle.radius_sq == 1
    assert a.same_as(Point.of(1, 0))
    assert b.same_as(Point.of(0, 1))


def test_incircle_scaling():
    circle, _, _ = incircle_tangent_points(
        Point.of(0, 0), Point.of(1, 0), Point.of(0, 1), ExactReal(2))
    assert circle.center.same_as(Point.of(2, 2))


def test_incircle_sixty_degree_angle():
    # r = tan(30) * 1, so r^2 = 1/3; checked via exact tangency below.
    d2 = Point.of(Fraction(1, 2), sqrt(3) / 2)
    circle, a, b = incircle_tangent_points(
        Point.of(0, 0), Point.of(1, 0), d2, ExactReal(1))
    assert circle.radius_sq == Fraction(1, 3)
    ray1 = Line.through(Point.of(0, 0), Point.of(1, 0))
    foot = foot_of_perpendicular(circle.center, ray1)
    assert compare(distance_sq(circle.center, foot), circle.radius_sq) == Ordering.EQUAL
    assert foot.same_as(a)


def test_tangent_from_external_point():
    # Hand solve: tangency points from (2, 0) to the unit circle are
    # (1/2, +/- sqrt(3)/2); lexicographic first has negative y.
    t_first = tangent_line_from(Point.of(2, 0), UNIT, Selector.FIRST)
    touch = intersect(t_first, UNIT, Selector.ONLY)
    assert touch.x == Fraction(1, 2)
    assert touch.y == -(sqrt(3) / 2)


def test_tangent_points_symmetric():
    t1 = tangent_line_from(Point.of(0, 2), UNIT, Selector.FIRST)
    t2 = tangent_line_from(Point.of(0, 2), UNIT, Selector.SECOND)
    p1 = intersect(t1, UNIT, Selector.ONLY)
    p2 = intersect(t2, UNIT, Selector.ONLY)
    assert (p1.x + p2.x).is_zero()
    assert compare(p1.y, p2.y) == Ordering.EQUAL


def test_tangency_is_exact():
    c = Circle(Point.of(1, -2), ExactReal(Fraction(9, 4)))
    line = tangent_line_from(Point.of(5, 3), c, Selector.SECOND)
    dist_num = line.eval_at(c.center)
    nn = line.a * line.a + line.b * line.b
    assert compare(dist_num * dist_num, c.radius_sq * nn) == Ordering.EQUAL


def test_tangent_from_inside_or_on_circle():
    with pytest.raises(PointInsideCircle):
        tangent_line_from(Point.of(0, Fraction(1, 2)), UNIT, Selector.FIRST)
    with pytest.raises(PointOnCircle):
        tangent_line_from(Point.of(0, 1), UNIT, Selector.FIRST)


def test_intersection_incidence_soundness():
    rng = random.Random(11)
    for _ in range(6):
        c1 = Circle(Point.of(rng.randint(-3, 3), rng.randint(-3, 3)),
                    ExactReal(rng.randint(4, 9)))
        c2 = Circle(Point.of(rng.randint(-3, 3) + 2, rng.randint(-3, 3)),
                    ExactReal(rng.randint(4, 9)))
        try:
            p = intersect(c1, c2, Selector.FIRST)
        except (NoIntersection, CoincidentObjects):
            continue
        assert c1.power_of(p).is_zero()
        assert c2.power_of(p).is_zero()


def test_midpoint():
    m = midpoint(Point.of(1, 5), Point.of(3, -1))
    assert m.same_as(Point.of(2, 2))


def test_coplanarity_defect_flat_square():
    pts = [Point3(0, 0, 0), Point3(1, 0, 0), Point3(1, 1, 0), Point3(0, 1, 0)]
    assert coplanarity_defect(*pts) == 0.0


def test_coplanarity_defect_simplex_positive():
    pts = [Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1)]
    assert coplanarity_defect(*pts) > 1e-3


def test_coplanarity_defect_rigid_motion_invariant():
    import numpy as np
    rng = random.Random(5)
    pts = [Point3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
           for _ in range(4)]
    base = coplanarity_defect(*pts)
    theta, phi = 0.7, -1.2
    rz = np.array([[math.cos(theta), -math.sin(theta), 0],
                   [math.sin(theta), math.cos(theta), 0], [0, 0, 1]])
    rx = np.array([[1, 0, 0], [0, math.cos(phi), -math.sin(phi)],
                   [0, math.sin(phi), math.cos(phi)]])
    rot = rz @ rx
    shift = np.array([0.3, -1.1, 2.2])
    moved = [Point3(*(rot @ p.as_array() + shift)) for p in pts]
    assert abs(coplanarity_defect(*moved) - base) < 1e-12
