"""Construction DSL: parser, exact interpreter, SVG rendering."""

from .interp import (AssertionReport, ExecutionError, GeomObject, MissingParam,
                     Trace, TraceStep, execute)
from .parser import (ArityMismatch, AssertStatement, BindStatement,
                     ConstructionProgram, ParamDecl, SketchError,
                     SketchSyntaxError, ToolSet, ToolViolation,
                     UnknownIdentifier, parse)
from .svg import EmptyTraceError, Viewport, render_svg

__all__ = [
    "ArityMismatch",
    "AssertStatement",
    "AssertionReport",
    "BindStatement",
    "ConstructionProgram",
    "EmptyTraceError",
    "ExecutionError",
    "GeomObject",
    "MissingParam",
    "ParamDecl",
    "SketchError",
    "SketchSyntaxError",
    "ToolSet",
    "ToolViolation",
    "Trace",
    "TraceStep",
    "UnknownIdentifier",
    "Viewport",
    "execute",
    "parse",
    "render_svg",
]
