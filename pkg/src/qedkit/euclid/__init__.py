"""Exact 2-D geometric kernel plus numeric 3-D helpers."""

from .planar import (Circle, CoincidentObjects, DegenerateAngle, GeometryError,
                     Line, NoIntersection, Point, PointInsideCircle,
                     PointOnCircle, RotationDirection, Selector,
                     TangentCountMismatch, distance_sq, foot_of_perpendicular,
                     incircle_tangent_points, intersect, midpoint, rotate60,
                     tangent_line_from)
from .space import Point3, coplanarity_defect

__all__ = [
    "Circle",
    "CoincidentObjects",
    "DegenerateAngle",
    "GeometryError",
    "Line",
    "NoIntersection",
    "Point",
    "Point3",
    "PointInsideCircle",
    "PointOnCircle",
    "RotationDirection",
    "Selector",
    "TangentCountMismatch",
    "coplanarity_defect",
    "distance_sq",
    "foot_of_perpendicular",
    "incircle_tangent_points",
    "intersect",
    "midpoint",
    "rotate60",
    "tangent_line_from",
]
