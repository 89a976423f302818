"""Command-line driver: verify problems, emit JSON reports, render figures.

Subcommands:
    verify [ids | --all] [--seed N] [--figures] [--json|--human] [-o DIR] [--jobs N]
    render ID [--instance FILE] -o PATH
    list
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .euclid import Circle, Line, Point
from .exactnum import ExactReal
from .problems import (CONSTRUCTION_IDS, PROBLEMS, UnknownProblem,
                       problem_ids, render_construction, verify)
from .sketch import GeomObject

__all__ = ["RunConfig", "main"]


@dataclass
class RunConfig:
    ids: list[str] = field(default_factory=problem_ids)
    seed: int = 0
    out_dir: Path = Path("reports")
    figures: bool = False
    jobs: int = 1
    mode: str = "human"  # "human" | "json"


def _parse_rational(text) -> Fraction:
    return Fraction(str(text))


def parse_instance_file(path: Path) -> dict[str, GeomObject]:
    """Instance JSON: {"params": {name: {"point": [x, y]} |
    {"line": [a, b, c]} | {"circle": {"center": [x, y], "radius_sq": r}}}}
    with rationals written as strings like "3/5"."""
    data = json.loads(path.read_text(encoding="utf-8"))
    out: dict[str, GeomObject] = {}
    for name, spec in data.get("params", {}).items():
        if "point" in spec:
            x, y = spec["point"]
            out[name] = Point.of(_parse_rational(x), _parse_rational(y))
        elif "line" in spec:
            a, b, c = spec["line"]
            out[name] = Line(ExactReal(_parse_rational(a)),
                             ExactReal(_parse_rational(b)),
                             ExactReal(_parse_rational(c)))
        elif "circle" in spec:
            cx, cy = spec["circle"]["center"]
            out[name] = Circle(Point.of(_parse_rational(cx), _parse_rational(cy)),
                               ExactReal(_parse_rational(spec["circle"]["radius_sq"])))
        else:
            raise ValueError(f"param '{name}': unknown object spec {spec}")
    return out


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def cmd_verify(config: RunConfig) -> int:
    """Run the selected verifiers; exit 0 iff every problem passes."""
    config.out_dir.mkdir(parents=True, exist_ok=True)
    figures_dir = config.out_dir / "figures" if config.figures else None

    def run_one(pid: str):
        return verify(pid, seed=config.seed, figures_dir=figures_dir)

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(run_one, config.ids))
    else:
        reports = [run_one(pid) for pid in config.ids]

    for report in reports:
        _write_json(config.out_dir / f"{report.problem}.json",
                    report.to_json_dict())
    summary = {
        "seed": config.seed,
        "results": [{"problem": r.problem, "status": r.status} for r in reports],
        "all_pass": all(r.passed for r in reports),
        "elapsed_ms": {r.problem: round(r.elapsed_ms, 3) for r in reports},
    }
    _write_json(config.out_dir / "summary.json", summary)

    if config.mode == "json":
        print(json.dumps(summary, indent=2))
    else:
        for r in reports:
            mark = "✓" if r.passed else "✗"
            key = r.certificates[0].witness if r.certificates else (r.error or "")
            print(f"{mark} {r.problem}  {r.status:5s}  {key}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} problems pass; "
              f"reports in {config.out_dir}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(problem_id: str, instance_file: Optional[Path],
               out_path: Path) -> int:
    if problem_id not in CONSTRUCTION_IDS:
        hint = (" (did you mean p19a or p19b?)" if problem_id == "p19" else "")
        print(f"error: '{problem_id}' has no construction script{hint}; "
              f"renderable ids: {', '.join(CONSTRUCTION_IDS)}", file=sys.stderr)
        return 2
    instance = parse_instance_file(instance_file) if instance_file else None
    document = render_construction(problem_id, instance)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(document, encoding="utf-8")
    print(f"wrote {out_path}")
    return 0


def cmd_list() -> int:
    for pid in problem_ids():
        title, kind, _ = PROBLEMS[pid]
        print(f"{pid}  {kind:17s}  {title}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qedkit",
        description="Exact verification suite for the problem corpus")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verifiers and write reports")
    p_verify.add_argument("ids", nargs="*", help="problem ids (default: all)")
    p_verify.add_argument("--all", action="store_true", dest="run_all",
                          help="verify every problem")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--figures", action="store_true",
                          help="render SVG figures for construction problems")
    mode = p_verify.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_const", const="json",
                      dest="mode", help="print the summary as JSON")
    mode.add_argument("--human", action="store_const", const="human",
                      dest="mode", help="one line per problem (default)")
    p_verify.add_argument("-o", "--out", type=Path, default=Path("reports"))
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(mode="human")

    p_render = sub.add_parser("render", help="render a construction to SVG")
    p_render.add_argument("id")
    p_render.add_argument("--instance", type=Path, default=None,
                          help="JSON file with parameter bindings")
    p_render.add_argument("-o", "--out", type=Path, required=True)

    sub.add_parser("list", help="list the problem corpus")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        return cmd_list()

    if args.command == "render":
        return cmd_render(args.id, args.instance, args.out)

    ids = list(args.ids)
    if args.run_all or not ids:
        ids = problem_ids()
    known = set(problem_ids())
    bad = [pid for pid in ids if pid not in known]
    if bad:
        parser.error(f"unknown problem id(s): {', '.join(bad)}")  # exits 2
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    config = RunConfig(ids=ids, seed=args.seed, out_dir=args.out,
                       figures=args.figures, jobs=args.jobs, mode=args.mode)
    return cmd_verify(config)


if __name__ == "__main__":
    sys.exit(main())
