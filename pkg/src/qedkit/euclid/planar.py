"""Exact planar kernel: points, lines, circles, incidence and intersections.

All coordinates are ExactReal; every predicate is decided exactly.  Lines are
implicit ``ax + by + c = 0`` up to nonzero scaling, circles store the squared
radius so all constructions stay inside the constructible field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..exactnum import ExactReal, Ordering, compare, sqrt

__all__ = [
    "Circle",
    "CoincidentObjects",
    "DegenerateAngle",
    "GeometryError",
    "Line",
    "NoIntersection",
    "Point",
    "PointInsideCircle",
    "PointOnCircle",
    "Selector",
    "TangentCountMismatch",
    "distance_sq",
    "foot_of_perpendicular",
    "incircle_tangent_points",
    "intersect",
    "midpoint",
    "rotate60",
    "tangent_line_from",
]


class GeometryError(Exception):
    """Base class for exact-kernel failures."""


class NoIntersection(GeometryError):
    pass


class TangentCountMismatch(GeometryError):
    pass


class CoincidentObjects(GeometryError):
    pass


class DegenerateAngle(GeometryError):
    pass


class PointInsideCircle(GeometryError):
    pass


class PointOnCircle(GeometryError):
    pass


class Selector(enum.Enum):
    ONLY = "only"
    FIRST = "first"
    SECOND = "second"


Scalar = Union[int, Fraction, ExactReal]


def _ex(v: Scalar) -> ExactReal:
    return v if isinstance(v, ExactReal) else ExactReal(v)


@dataclass(frozen=True)
class Point:
    x: ExactReal
    y: ExactReal

    @staticmethod
    def of(x: Scalar, y: Scalar) -> "Point":
        return Point(_ex(x), _ex(y))

    def same_as(self, other: "Point") -> bool:
        return (self.x - other.x).is_zero() and (self.y - other.y).is_zero()

    def translate(self, dx: ExactReal, dy: ExactReal) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def scale(self, factor: Scalar) -> "Point":
        f = _ex(factor)
        return Point(self.x * f, self.y * f)

    def __repr__(self) -> str:
        return f"Point({self.x!r}, {self.y!r})"


@dataclass(frozen=True)
class Line:
    """ax + by + c = 0 with (a, b) != (0, 0)."""

    a: ExactReal
    b: ExactReal
    c: ExactReal

    def __post_init__(self) -> None:
        if self.a.is_zero() and self.b.is_zero():
            raise GeometryError("degenerate line: zero normal vector")

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        if p.same_as(q):
            raise GeometryError("line through coincident points")
        a = q.y - p.y
        b = p.x - q.x
        c = -(a * p.x + b * p.y)
        return Line(a, b, c)

    def eval_at(self, p: Point) -> ExactReal:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.eval_at(p).is_zero()

    def same_as(self, other: "Line") -> bool:
        # Equality of the equivalence class under nonzero scaling.
        return ((self.a * other.b - self.b * other.a).is_zero()
                and (self.a * other.c - self.c * other.a).is_zero()
                and (self.b * other.c - self.c * other.b).is_zero())

    def is_parallel_to(self, other: "Line") -> bool:
        return (self.a * other.b - self.b * other.a).is_zero()

    def is_perpendicular_to(self, other: "Line") -> bool:
        return (self.a * other.a + self.b * other.b).is_zero()

    def parallel_through(self, p: Point) -> "Line":
        return Line(self.a, self.b, -(self.a * p.x + self.b * p.y))

    def perpendicular_through(self, p: Point) -> "Line":
        a, b = -self.b, self.a
        return Line(a, b, -(a * p.x + b * p.y))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius_sq: ExactReal

    def __post_init__(self) -> None:
        if self.radius_sq.sign() < 0:
            raise GeometryError("circle with negative squared radius")

    @staticmethod
    def center_through(center: Point, through: Point) -> "Circle":
        return Circle(center, distance_sq(center, through))

    def power_of(self, p: Point) -> ExactReal:
        """distance(center, p)^2 - r^2; zero exactly on the circle."""
        return distance_sq(self.center, p) - self.radius_sq

    def contains(self, p: Point) -> bool:
        return self.power_of(p).is_zero()


def distance_sq(p: Point, q: Point) -> ExactReal:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    half = Fraction(1, 2)
    return Point((p.x + q.x) * half, (p.y + q.y) * half)


def _lex_less(p: Point, q: Point) -> bool:
    cx = compare(p.x, q.x)
    if cx != Ordering.EQUAL:
        return cx == Ordering.LESS
    return compare(p.y, q.y) == Ordering.LESS


def _pick(points: list[Point], selector: Selector) -> Point:
    if len(points) == 1:
        if selector is Selector.SECOND:
            raise TangentCountMismatch(
                "selector 'second' on a single intersection point")
        return points[0]
    first, second = points
    if _lex_less(second, first):
        first, second = second, first
    if selector is Selector.ONLY:
        raise TangentCountMismatch(
            "selector 'only' but the objects meet in two points")
    return first if selector is Selector.FIRST else second


def _intersect_lines(l1: Line, l2: Line) -> list[Point]:
    det = l1.a * l2.b - l2.a * l1.b
    if det.is_zero():
        if l1.same_as(l2):
            raise CoincidentObjects("identical lines")
        raise NoIntersection("parallel lines")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return [Point(x, y)]


def _intersect_line_circle(l: Line, c: Circle) -> list[Point]:
    # Orthogonal projection of the center onto the line, then step along the
    # direction vector by the half-chord length.
    nn = l.a * l.a + l.b * l.b
    t = l.eval_at(c.center) / nn
    foot = Point(c.center.x - l.a * t, c.center.y - l.b * t)
    disc = c.radius_sq - distance_sq(c.center, foot)
    s = disc.sign()
    if s < 0:
        raise NoIntersection("line misses circle")
    if s == 0:
        return [foot]
    step = sqrt(disc / nn)
    return [Point(foot.x + l.b * step, foot.y - l.a * step),
            Point(foot.x - l.b * step, foot.y + l.a * step)]


def _radical_line(c1: Circle, c2: Circle) -> Line:
    # Difference of the two circle equations.
    two = ExactReal(2)
    a = two * (c2.center.x - c1.center.x)
    b = two * (c2.center.y - c1.center.y)
    sq1 = c1.center.x * c1.center.x + c1.center.y * c1.center.y
    sq2 = c2.center.x * c2.center.x + c2.center.y * c2.center.y
    c = (sq1 - c1.radius_sq) - (sq2 - c2.radius_sq)
    return Line(a, b, c)


def _intersect_circles(c1: Circle, c2: Circle) -> list[Point]:
    if c1.center.same_as(c2.center):
        if (c1.radius_sq - c2.radius_sq).is_zero():
            raise CoincidentObjects("identical circles")
        raise NoIntersection("concentric circles")
    return _intersect_line_circle(_radical_line(c1, c2), c1)


def intersect(o1: Union[Line, Circle], o2: Union[Line, Circle],
              selector: Selector = Selector.ONLY) -> Point:
    """Exact intersection point; two-point cases are ordered lexicographically
    by (x, y) so replay is deterministic."""
    if isinstance(o1, Line) and isinstance(o2, Line):
        pts = _intersect_lines(o1, o2)
    elif isinstance(o1, Line) and isinstance(o2, Circle):
        pts = _intersect_line_circle(o1, o2)
    elif isinstance(o1, Circle) and isinstance(o2, Line):
        pts = _intersect_line_circle(o2, o1)
    elif isinstance(o1, Circle) and isinstance(o2, Circle):
        if o1.center.same_as(o2.center) and (o1.radius_sq - o2.radius_sq).is_zero():
            raise CoincidentObjects("identical circles")
        pts = _intersect_circles(o1, o2)
    else:
        raise TypeError("intersect expects Line or Circle operands")
    return _pick(pts, selector)


def foot_of_perpendicular(p: Point, l: Line) -> Point:
    nn = l.a * l.a + l.b * l.b
    t = l.eval_at(p) / nn
    return Point(p.x - l.a * t, p.y - l.b * t)


class RotationDirection(enum.Enum):
    CCW = "ccw"
    CW = "cw"


def rotate60(p: Point, center: Point, direction: RotationDirection = RotationDirection.CCW) -> Point:
    """Exact rotation by 60 degrees about a center; cos = 1/2, sin = sqrt(3)/2."""
    cos = ExactReal(Fraction(1, 2))
    sin = sqrt(3) / 2
    if direction is RotationDirection.CW:
        sin = -sin
    dx = p.x - center.x
    dy = p.y - center.y
    return Point(center.x + dx * cos - dy * sin,
                 center.y + dx * sin + dy * cos)


def incircle_tangent_points(vertex: Point, ray1_dir: Point, ray2_dir: Point,
                            tangent_len: Scalar) -> tuple[Circle, Point, Point]:
    """Circle inscribed in the angle at ``vertex`` whose tangency points sit at
    the given distance from the vertex along each ray.

    ``ray1_dir``/``ray2_dir`` are direction vectors (as Points).  Returns
    (circle, tangency on ray1, tangency on ray2).
    """
    t = _ex(tangent_len)
    if t.sign() <= 0:
        raise GeometryError("tangent length must be positive")
    cross = ray1_dir.x * ray2_dir.y - ray1_dir.y * ray2_dir.x
    if cross.is_zero():
        raise DegenerateAngle("rays are collinear")
    len1 = sqrt(ray1_dir.x * ray1_dir.x + ray1_dir.y * ray1_dir.y)
    len2 = sqrt(ray2_dir.x * ray2_dir.x + ray2_dir.y * ray2_dir.y)
    a = Point(vertex.x + ray1_dir.x * t / len1, vertex.y + ray1_dir.y * t / len1)
    b = Point(vertex.x + ray2_dir.x * t / len2, vertex.y + ray2_dir.y * t / len2)
    ray1 = Line.through(vertex, Point(vertex.x + ray1_dir.x, vertex.y + ray1_dir.y))
    ray2 = Line.through(vertex, Point(vertex.x + ray2_dir.x, vertex.y + ray2_dir.y))
    center = intersect(ray1.perpendicular_through(a),
                       ray2.perpendicular_through(b), Selector.ONLY)
    return Circle(center, distance_sq(center, a)), a, b


def tangent_line_from(p: Point, c: Circle, selector: Selector) -> Line:
    """Tangent line from an external point, selected by the lexicographic
    order of the tangency points."""
    power = c.power_of(p)
    s = power.sign()
    if s < 0:
        raise PointInsideCircle("no tangent from an interior point")
    if s == 0:
        raise PointOnCircle("point lies on the circle")
    if selector is Selector.ONLY:
        raise TangentCountMismatch("external point has two tangents")
    thales = Circle(midpoint(p, c.center), distance_sq(p, c.center) / 4)
    touch = intersect(thales, c, selector)
    return Line.through(p, touch)
