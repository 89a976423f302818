"""Parser and static checks for the construction DSL.

One statement per line, ``#`` starts a comment.  Grammar:

    tools compass_and_straightedge | straightedge_only
    param NAME: point | line | circle
    bind NAME = primitive(arg, ...)
    assert predicate(arg, ...)

Primitives: line(P,Q), circle(C,THROUGH), circle_radius(C,P,Q),
intersect(O1,O2, only|first|second), parallel_through(P,L),
perpendicular_through(P,L), rotate60(P,CENTER, ccw|cw).  The compass-flavored
primitives (everything except line/intersect) are rejected under
straightedge_only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

__all__ = [
    "ArityMismatch",
    "AssertStatement",
    "BindStatement",
    "ConstructionProgram",
    "ParamDecl",
    "SketchError",
    "SketchSyntaxError",
    "ToolSet",
    "ToolViolation",
    "UnknownIdentifier",
    "parse",
]


class SketchError(Exception):
    pass


class SketchSyntaxError(SketchError):
    def __init__(self, message: str, line: int, col: int = 1) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class UnknownIdentifier(SketchError):
    def __init__(self, name: str, line: int) -> None:
        super().__init__(f"line {line}: unknown identifier '{name}'")
        self.name = name
        self.line = line


class ArityMismatch(SketchError):
    def __init__(self, callee: str, expected: str, got: int, line: int) -> None:
        super().__init__(
            f"line {line}: {callee} expects {expected} arguments, got {got}")
        self.line = line


class ToolViolation(SketchError):
    def __init__(self, primitive: str, line: int) -> None:
        super().__init__(
            f"line {line}: primitive '{primitive}' is not available under "
            "straightedge_only")
        self.line = line


class ToolSet(Enum):
    COMPASS_AND_STRAIGHTEDGE = "compass_and_straightedge"
    STRAIGHTEDGE_ONLY = "straightedge_only"


PARAM_KINDS = ("point", "line", "circle")

# primitive -> (positional object kinds, trailing keyword choices or None,
#               result kind, allowed under straightedge_only)
PRIMITIVES: dict[str, tuple[tuple[str, ...], Optional[tuple[str, ...]], str, bool]] = {
    "line": (("point", "point"), None, "line", True),
    "circle": (("point", "point"), None, "circle", False),
    "circle_radius": (("point", "point", "point"), None, "circle", False),
    "intersect": (("object", "object"), ("only", "first", "second"), "point", True),
    "parallel_through": (("point", "line"), None, "line", False),
    "perpendicular_through": (("point", "line"), None, "line", False),
    "rotate60": (("point", "point"), ("ccw", "cw"), "point", False),
}

PREDICATES: dict[str, tuple[str, ...]] = {
    "equal_length": ("point", "point", "point", "point"),
    "on_line": ("point", "line"),
    "on_circle": ("point", "circle"),
    "parallel": ("line", "line"),
    "perpendicular": ("line", "line"),
    "collinear": ("point", "point", "point"),
    "between": ("point", "point", "point"),
    "equal_point": ("point", "point"),
}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_TOOLS_RE = re.compile(r"tools\s+(\S+)\s*$")
_PARAM_RE = re.compile(r"param\s+(\S+)\s*:\s*(\S+)\s*$")
_BIND_RE = re.compile(r"bind\s+(\S+)\s*=\s*([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)\s*$")
_ASSERT_RE = re.compile(r"assert\s+([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)\s*$")


@dataclass(frozen=True)
class ParamDecl:
    name: str
    kind: str
    line: int


@dataclass(frozen=True)
class BindStatement:
    name: str
    primitive: str
    args: tuple[str, ...]
    keyword: Optional[str]
    line: int
    index: int  # executable statement index


@dataclass(frozen=True)
class AssertStatement:
    predicate: str
    args: tuple[str, ...]
    line: int
    text: str


@dataclass
class ConstructionProgram:
    tools: ToolSet
    params: tuple[ParamDecl, ...]
    statements: tuple[object, ...]  # BindStatement | AssertStatement
    source: str = field(default="", repr=False)

    @property
    def binds(self) -> list[BindStatement]:
        return [s for s in self.statements if isinstance(s, BindStatement)]

    @property
    def asserts(self) -> list[AssertStatement]:
        return [s for s in self.statements if isinstance(s, AssertStatement)]


def _split_args(raw: str, line: int) -> list[str]:
    raw = raw.strip()
    if not raw:
        return []
    parts = [part.strip() for part in raw.split(",")]
    if any(not part for part in parts):
        raise SketchSyntaxError("empty argument", line)
    return parts


def parse(text: str) -> ConstructionProgram:
    """Parse and statically check a construction script."""
    tools: Optional[ToolSet] = None
    params: list[ParamDecl] = []
    statements: list[object] = []
    kinds: dict[str, str] = {}  # identifier -> point|line|circle
    bind_index = 0

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip()) + 1

        if stripped.startswith("tools"):
            m = _TOOLS_RE.match(stripped)
            if not m:
                raise SketchSyntaxError("malformed tools declaration", line_no, indent)
            if tools is not None:
                raise SketchSyntaxError("duplicate tools declaration", line_no, indent)
            if statements or params:
                raise SketchSyntaxError("tools must precede other statements",
                                        line_no, indent)
            try:
                tools = ToolSet(m.group(1))
            except ValueError:
                raise SketchSyntaxError(f"unknown tool set '{m.group(1)}'",
                                        line_no, indent) from None
            continue

        if tools is None:
            raise SketchSyntaxError("script must start with a tools declaration",
                                    line_no, indent)

        if stripped.startswith("param"):
            m = _PARAM_RE.match(stripped)
            if not m:
                raise SketchSyntaxError("malformed param declaration", line_no, indent)
            name, kind = m.group(1), m.group(2)
            if statements:
                raise SketchSyntaxError("params must precede construction statements",
                                        line_no, indent)
            if not _IDENT.match(name):
                raise SketchSyntaxError(f"invalid identifier '{name}'", line_no, indent)
            if kind not in PARAM_KINDS:
                raise SketchSyntaxError(f"unknown param kind '{kind}'", line_no, indent)
            if name in kinds:
                raise SketchSyntaxError(f"rebinding of '{name}'", line_no, indent)
            params.append(ParamDecl(name, kind, line_no))
            kinds[name] = kind
            continue

        if stripped.startswith("bind"):
            m = _BIND_RE.match(stripped)
            if not m:
                raise SketchSyntaxError("malformed bind statement", line_no, indent)
            name, primitive, rawargs = m.group(1), m.group(2), m.group(3)
            if not _IDENT.match(name):
                raise SketchSyntaxError(f"invalid identifier '{name}'", line_no, indent)
            if name in kinds:
                raise SketchSyntaxError(f"rebinding of '{name}'", line_no, indent)
            if primitive not in PRIMITIVES:
                raise SketchSyntaxError(f"unknown primitive '{primitive}'",
                                        line_no, indent)
            arg_kinds, keyword_choices, result_kind, se_ok = PRIMITIVES[primitive]
            if tools is ToolSet.STRAIGHTEDGE_ONLY and not se_ok:
                raise ToolViolation(primitive, line_no)
            args = _split_args(rawargs, line_no)
            expected = len(arg_kinds) + (1 if keyword_choices else 0)
            if len(args) != expected:
                raise ArityMismatch(primitive, str(expected), len(args), line_no)
            keyword = None
            if keyword_choices:
                keyword = args[-1]
                args = args[:-1]
                if keyword not in keyword_choices:
                    raise SketchSyntaxError(
                        f"{primitive} selector must be one of {keyword_choices},"
                        f" got '{keyword}'", line_no, indent)
            for arg, want in zip(args, arg_kinds):
                got = kinds.get(arg)
                if got is None:
                    raise UnknownIdentifier(arg, line_no)
                if want == "object":
                    if got not in ("line", "circle"):
                        raise SketchSyntaxError(
                            f"{primitive} argument '{arg}' must be a line or "
                            f"circle, got {got}", line_no, indent)
                elif got != want:
                    raise SketchSyntaxError(
                        f"{primitive} argument '{arg}' must be a {want}, got {got}",
                        line_no, indent)
            statements.append(BindStatement(name, primitive, tuple(args),
                                            keyword, line_no, bind_index))
            kinds[name] = result_kind
            bind_index += 1
            continue

        if stripped.startswith("assert"):
            m = _ASSERT_RE.match(stripped)
            if not m:
                raise SketchSyntaxError("malformed assert statement", line_no, indent)
            predicate, rawargs = m.group(1), m.group(2)
            if predicate not in PREDICATES:
                raise SketchSyntaxError(f"unknown predicate '{predicate}'",
                                        line_no, indent)
            want_kinds = PREDICATES[predicate]
            args = _split_args(rawargs, line_no)
            if len(args) != len(want_kinds):
                raise ArityMismatch(predicate, str(len(want_kinds)), len(args), line_no)
            for arg, want in zip(args, want_kinds):
                got = kinds.get(arg)
                if got is None:
                    raise UnknownIdentifier(arg, line_no)
                if got != want:
                    raise SketchSyntaxError(
                        f"{predicate} argument '{arg}' must be a {want}, got {got}",
                        line_no, indent)
            statements.append(AssertStatement(predicate, tuple(args), line_no,
                                              stripped))
            continue

        raise SketchSyntaxError(f"unrecognized statement '{stripped.split()[0]}'",
                                line_no, indent)

    if tools is None:
        raise SketchSyntaxError("empty script: missing tools declaration", 1)
    return ConstructionProgram(tools, tuple(params), tuple(statements), text)
