"""Deterministic SVG rendering of construction traces.

Coordinates are exact until the final formatting step, which renders 12
significant digits (round-half-even) from refined intervals, so identical
traces produce byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..euclid import (Circle, CoincidentObjects, Line, NoIntersection, Point,
                      Selector, intersect)
from ..exactnum import ExactReal, sqrt
from .interp import Trace
from .parser import SketchError

__all__ = ["EmptyTraceError", "Viewport", "render_svg"]

_CANVAS_WIDTH = Fraction(640)


class EmptyTraceError(SketchError):
    """Nothing to draw: empty trace or degenerate viewport."""


@dataclass(frozen=True)
class Viewport:
    x_min: Fraction
    y_min: Fraction
    width: Fraction
    height: Fraction

    @staticmethod
    def of(x_min, y_min, width, height) -> "Viewport":
        return Viewport(Fraction(x_min), Fraction(y_min),
                        Fraction(width), Fraction(height))


def _fmt(value: Union[ExactReal, Fraction]) -> str:
    if isinstance(value, Fraction):
        value = ExactReal(value)
    return value.to_decimal(12)


def _corners(vp: Viewport) -> list[Point]:
    x0, y0 = vp.x_min, vp.y_min
    x1, y1 = vp.x_min + vp.width, vp.y_min + vp.height
    return [Point.of(x0, y0), Point.of(x1, y0), Point.of(x1, y1), Point.of(x0, y1)]


def _inside(p: Point, vp: Viewport) -> bool:
    return (p.x >= vp.x_min and p.x <= vp.x_min + vp.width
            and p.y >= vp.y_min and p.y <= vp.y_min + vp.height)


def _clip_line(line: Line, vp: Viewport) -> list[Point]:
    """Endpoints of the portion of an infinite line inside the viewport."""
    corners = _corners(vp)
    borders = [Line.through(corners[i], corners[(i + 1) % 4]) for i in range(4)]
    hits: list[Point] = []
    for border, a, b in zip(borders, corners, corners[1:] + corners[:1]):
        try:
            p = intersect(line, border, Selector.ONLY)
        except NoIntersection:
            continue
        except CoincidentObjects:
            return [a, b]
        if _inside(p, vp) and not any(p.same_as(q) for q in hits):
            hits.append(p)
    return hits[:2]


class _Doc:
    def __init__(self) -> None:
        self.parts: list[str] = []

    def add(self, text: str) -> None:
        self.parts.append(text)


def render_svg(trace: Trace, viewport: Viewport) -> str:
    """Render every traced object; returns the SVG document text."""
    if viewport.width <= 0 or viewport.height <= 0:
        raise EmptyTraceError("degenerate viewport")
    objects = trace.objects()
    if not objects:
        raise EmptyTraceError("empty trace")

    scale = _CANVAS_WIDTH / viewport.width
    height_px = viewport.height * scale
    y_max = viewport.y_min + viewport.height

    def px(x: ExactReal) -> ExactReal:
        return (x - viewport.x_min) * scale

    def py(y: ExactReal) -> ExactReal:
        return (ExactReal(y_max) - y) * scale

    doc = _Doc()
    doc.add('<?xml version="1.0" encoding="UTF-8"?>')
    doc.add(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(_CANVAS_WIDTH)}" height="{_fmt(height_px)}" '
            f'viewBox="0 0 {_fmt(_CANVAS_WIDTH)} {_fmt(height_px)}">')
    doc.add(f'<rect x="0" y="0" width="{_fmt(_CANVAS_WIDTH)}" '
            f'height="{_fmt(height_px)}" fill="#ffffff"/>')

    labels: list[str] = []
    for name, obj in objects:
        if isinstance(obj, Line):
            ends = _clip_line(obj, viewport)
            if len(ends) < 2:
                continue
            a, b = ends
            doc.add(f'<line x1="{_fmt(px(a.x))}" y1="{_fmt(py(a.y))}" '
                    f'x2="{_fmt(px(b.x))}" y2="{_fmt(py(b.y))}" '
                    f'stroke="#444444" stroke-width="1"/>')
        elif isinstance(obj, Circle):
            r = sqrt(obj.radius_sq) * scale
            doc.add(f'<circle cx="{_fmt(px(obj.center.x))}" '
                    f'cy="{_fmt(py(obj.center.y))}" r="{_fmt(r)}" '
                    f'fill="none" stroke="#444444" stroke-width="1"/>')
        elif isinstance(obj, Point):
            cx, cy = _fmt(px(obj.x)), _fmt(py(obj.y))
            doc.add(f'<circle cx="{cx}" cy="{cy}" r="3" fill="#000000"/>')
            labels.append(f'<text x="{cx}" y="{cy}" dx="5" dy="-5" '
                          f'font-family="monospace" font-size="11" '
                          f'fill="#202020">{name}</text>')
    for label in labels:
        doc.add(label)
    doc.add("</svg>")
    return "\n".join(doc.parts) + "\n"
