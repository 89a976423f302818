"""Interpreter for parsed construction programs over the exact kernel."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..euclid import (Circle, GeometryError, Line, Point, RotationDirection,
                      Selector, distance_sq, intersect, rotate60)
from ..exactnum import Ordering, compare
from .parser import (AssertStatement, BindStatement, ConstructionProgram,
                     SketchError, ToolSet)

__all__ = [
    "AssertionReport",
    "ExecutionError",
    "GeomObject",
    "MissingParam",
    "Trace",
    "TraceStep",
    "execute",
]

GeomObject = Union[Point, Line, Circle]

# Primitives recorded as single sugar steps rather than classical compass
# sequences; all of them are illegal under straightedge_only anyway.
_SUGAR = {"circle_radius", "parallel_through", "perpendicular_through", "rotate60"}


class MissingParam(SketchError):
    def __init__(self, name: str) -> None:
        super().__init__(f"missing binding for param '{name}'")
        self.name = name


class ExecutionError(SketchError):
    """Geometry failure while executing a statement."""

    def __init__(self, statement_index: int, line: int, cause: Exception) -> None:
        super().__init__(f"statement {statement_index} (line {line}): {cause}")
        self.statement_index = statement_index
        self.line = line
        self.cause = cause


@dataclass(frozen=True)
class TraceStep:
    name: str
    obj: GeomObject
    statement_index: int
    primitive: str
    sugar: bool


@dataclass(frozen=True)
class AssertionReport:
    predicate_text: str
    passed: bool
    witness: str


@dataclass
class Trace:
    tools: ToolSet
    givens: tuple[tuple[str, GeomObject], ...]
    steps: tuple[TraceStep, ...]
    assertions: tuple[AssertionReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def objects(self) -> list[tuple[str, GeomObject]]:
        return list(self.givens) + [(s.name, s.obj) for s in self.steps]


def _fmt(value) -> str:
    return value.to_decimal(12)


def _fmt_point(p: Point) -> str:
    return f"({_fmt(p.x)}, {_fmt(p.y)})"


def _check_kind(name: str, obj: GeomObject, kind: str) -> None:
    want = {"point": Point, "line": Line, "circle": Circle}[kind]
    if not isinstance(obj, want):
        raise MissingParam(
            f"{name} (expected {kind}, got {type(obj).__name__})")


def _eval_primitive(stmt: BindStatement, env: dict[str, GeomObject]) -> GeomObject:
    args = [env[a] for a in stmt.args]
    prim = stmt.primitive
    if prim == "line":
        return Line.through(args[0], args[1])
    if prim == "circle":
        return Circle.center_through(args[0], args[1])
    if prim == "circle_radius":
        return Circle(args[0], distance_sq(args[1], args[2]))
    if prim == "intersect":
        return intersect(args[0], args[1], Selector(stmt.keyword))
    if prim == "parallel_through":
        return args[1].parallel_through(args[0])
    if prim == "perpendicular_through":
        return args[1].perpendicular_through(args[0])
    if prim == "rotate60":
        direction = (RotationDirection.CCW if stmt.keyword == "ccw"
                     else RotationDirection.CW)
        return rotate60(args[0], args[1], direction)
    raise AssertionError(f"unhandled primitive {prim}")


def _eval_predicate(stmt: AssertStatement, env: dict[str, GeomObject]) -> AssertionReport:
    args = [env[a] for a in stmt.args]
    pred = stmt.predicate
    if pred == "equal_length":
        d1 = distance_sq(args[0], args[1])
        d2 = distance_sq(args[2], args[3])
        ok = compare(d1, d2) == Ordering.EQUAL
        witness = (f"|{stmt.args[0]}{stmt.args[1]}|^2 = {_fmt(d1)}, "
                   f"|{stmt.args[2]}{stmt.args[3]}|^2 = {_fmt(d2)}")
    elif pred == "on_line":
        residual = args[1].eval_at(args[0])
        ok = residual.is_zero()
        witness = f"line residual at {stmt.args[0]} = {_fmt(residual)}"
    elif pred == "on_circle":
        residual = args[1].power_of(args[0])
        ok = residual.is_zero()
        witness = f"circle power of {stmt.args[0]} = {_fmt(residual)}"
    elif pred == "parallel":
        cross = args[0].a * args[1].b - args[0].b * args[1].a
        ok = cross.is_zero()
        witness = f"normal cross product = {_fmt(cross)}"
    elif pred == "perpendicular":
        dot = args[0].a * args[1].a + args[0].b * args[1].b
        ok = dot.is_zero()
        witness = f"normal dot product = {_fmt(dot)}"
    elif pred == "collinear":
        p, q, r = args
        cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
        ok = cross.is_zero()
        witness = f"cross product = {_fmt(cross)}"
    elif pred == "between":
        p, q, r = args  # q between p and r
        cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
        dot = (q.x - p.x) * (q.x - r.x) + (q.y - p.y) * (q.y - r.y)
        ok = cross.is_zero() and dot.sign() <= 0
        witness = f"cross = {_fmt(cross)}, end-dot = {_fmt(dot)}"
    elif pred == "equal_point":
        ok = args[0].same_as(args[1])
        witness = f"{_fmt_point(args[0])} vs {_fmt_point(args[1])}"
    else:
        raise AssertionError(f"unhandled predicate {pred}")
    return AssertionReport(stmt.text, ok, witness)


def execute(program: ConstructionProgram,
            bindings: dict[str, GeomObject]) -> Trace:
    """Run a program on concrete parameter objects; every assert is exact."""
    env: dict[str, GeomObject] = {}
    givens: list[tuple[str, GeomObject]] = []
    for decl in program.params:
        if decl.name not in bindings:
            raise MissingParam(decl.name)
        obj = bindings[decl.name]
        _check_kind(decl.name, obj, decl.kind)
        env[decl.name] = obj
        givens.append((decl.name, obj))

    steps: list[TraceStep] = []
    assertions: list[AssertionReport] = []
    for stmt in program.statements:
        if isinstance(stmt, BindStatement):
            try:
                obj = _eval_primitive(stmt, env)
            except GeometryError as exc:
                raise ExecutionError(stmt.index, stmt.line, exc) from exc
            env[stmt.name] = obj
            steps.append(TraceStep(stmt.name, obj, stmt.index, stmt.primitive,
                                   stmt.primitive in _SUGAR))
        else:
            assertions.append(_eval_predicate(stmt, env))
    return Trace(program.tools, tuple(givens), tuple(steps), tuple(assertions))
