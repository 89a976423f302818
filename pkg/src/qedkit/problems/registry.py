"""Problem registry and the verify dispatcher."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import certificates as certs_mod
from . import oracles
from .constructions import (CONSTRUCTION_IDS, default_instance,
                            render_construction, run_construction,
                            scale_instance, varied_instance)
from .report import Certificate, VerificationReport, timed_report

__all__ = ["PROBLEMS", "UnknownProblem", "problem_ids", "verify"]


class UnknownProblem(KeyError):
    def __init__(self, problem_id: str) -> None:
        super().__init__(problem_id)
        self.problem_id = problem_id

    def __str__(self) -> str:
        return (f"unknown problem '{self.problem_id}'; "
                f"known ids: {', '.join(problem_ids())}")


def _exact_body(fn: Callable) -> Callable[[int, Optional[Path]], tuple]:
    def body(seed: int, figures_dir: Optional[Path]) -> tuple:
        out = fn()
        certs = out[-1] if isinstance(out, tuple) else out
        return certs, []
    return body


def _p31_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    certs: list[Certificate] = [oracles.p31_planar_sanity()]
    for k in range(2):
        _, instance_certs = oracles.p31_instance(seed + k)
        for c in instance_certs:
            certs.append(Certificate(f"instance {k}: {c.claim}", c.kind,
                                     c.witness, c.passed))
    return certs, []


def _p45_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    _, _, certs = oracles.p45_search(20)
    return certs, []


def _p49_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    certs = list(oracles.p49_compare(
        [Fraction(2), Fraction(3), Fraction(4), Fraction(5)], 10_000, seed))
    rect = oracles.p49_compare(
        [Fraction(3), Fraction(4), Fraction(3), Fraction(4)], 500, seed)
    rect_area = next(c for c in rect if "Brahmagupta" in c.claim)
    certs.append(Certificate(
        "rectangle sides (3,4,3,4) give cyclic area 12",
        "numeric", rect_area.witness,
        rect_area.passed and "12" in rect_area.witness))
    square = oracles.p49_compare([Fraction(1)] * 4, 500, seed)
    square_area = next(c for c in square if "Brahmagupta" in c.claim)
    certs.append(Certificate(
        "unit square sides give cyclic area 1",
        "numeric", square_area.witness,
        square_area.passed and "area = 1," in square_area.witness))
    return certs, []


def _p71_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    certs: list[Certificate] = []
    for fid, y1, y2 in (("linear", 0.0, 1.0), ("cubic", -1.0, 1.0),
                        ("exp", 1.0, 3.0)):
        _, _, probe_certs = oracles.p71_probe(fid, y1, y2)
        certs.extend(probe_certs)
    return certs, []


def _p07_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    return oracles.p07_certificates(), []


def _p26_body(seed: int, figures_dir: Optional[Path]) -> tuple:
    return oracles.p26_certificates(seed), []


def _construction_body(script_ids: tuple[str, ...]) -> Callable:
    def body(seed: int, figures_dir: Optional[Path]) -> tuple:
        certs: list[Certificate] = []
        figures: list[str] = []
        for sid in script_ids:
            _, default_certs = run_construction(sid, seed=seed)
            for c in default_certs:
                certs.append(Certificate(f"{sid} default: {c.claim}", c.kind,
                                         c.witness, c.passed))
            rng = random.Random(f"{sid}:{seed}")
            for k in range(5):
                factor = Fraction(rng.randint(1, 24), rng.randint(1, 24))
                inst = scale_instance(default_instance(sid), factor)
                _, run_certs = run_construction(sid, inst, seed=seed + k)
                certs.append(Certificate(
                    f"{sid} rescaled by {factor}: all exact assertions pass",
                    "exact",
                    f"{sum(c.passed for c in run_certs)}/{len(run_certs)} "
                    "certificates pass",
                    all(c.passed for c in run_certs)))
            for k in range(3):
                inst = varied_instance(sid, rng)
                _, run_certs = run_construction(sid, inst, seed=seed + 50 + k)
                certs.append(Certificate(
                    f"{sid} random parameters #{k}: all exact assertions pass",
                    "exact",
                    f"{sum(c.passed for c in run_certs)}/{len(run_certs)} "
                    "certificates pass",
                    all(c.passed for c in run_certs)))
            if figures_dir is not None:
                figures_dir.mkdir(parents=True, exist_ok=True)
                path = figures_dir / f"{sid}.svg"
                path.write_text(render_construction(sid), encoding="utf-8")
                figures.append(str(path))
        return certs, figures
    return body


# problem id -> (title, kind, verifier body)
PROBLEMS: dict[str, tuple[str, str, Callable]] = {
    "p01": ("radical inequality: certified answer interval [3/5, 1]",
            "exact-certificate", _exact_body(certs_mod.p01_certificate)),
    "p07": ("F(x1) - F(x2) <= (x1-x2)^2 admits only constant functions",
            "oracle", _p07_body),
    "p10": ("construct K on AB and M on BC with AK = KM = MC",
            "construction", _construction_body(("p10",))),
    "p12": ("solve 2 cbrt(2y-1) = y^3 + 1: roots 1 and (-1 +/- sqrt5)/2",
            "exact-certificate", _exact_body(certs_mod.p12_roots)),
    "p17": ("sin^7 x + 1/sin^3 x = cos^7 x + 1/cos^3 x: x = pi/4 + k pi",
            "exact-certificate", _exact_body(certs_mod.p17_solutions)),
    "p19": ("cut a triangle of given (a) or minimal (b) perimeter off an angle",
            "construction", _construction_body(("p19a", "p19b"))),
    "p22": ("straightedge-only perpendicular onto a drawn diameter",
            "construction", _construction_body(("p22",))),
    "p26": ("angles of the triangle with side lengths AO, BO, CO",
            "oracle", _p26_body),
    "p30": ("locus with fixed distance sum to two crossing lines",
            "construction", _construction_body(("p30",))),
    "p31": ("tangency points of a sphere-tangent space quadrilateral are coplanar",
            "oracle", _p31_body),
    "p38": ("sin 10 degrees is irrational (rational root theorem)",
            "exact-certificate", _exact_body(certs_mod.p38_certificate)),
    "p42": ("six plane points, integer pairwise distances, no three collinear",
            "exact-certificate", _exact_body(certs_mod.p42_points)),
    "p45": ("no lattice equilateral triangle (exhaustive apex scan)",
            "oracle", _p45_body),
    "p48": ("rebuild a quadrilateral from four sides plus the midline",
            "construction", _construction_body(("p48",))),
    "p49": ("cyclic quadrilateral maximizes area for fixed side lengths",
            "oracle", _p49_body),
    "p50": ("divide a segment into six equal parts, straightedge only",
            "construction", _construction_body(("p50",))),
    "p52": ("compare log_2 3 with log_3 5 exactly",
            "exact-certificate", _exact_body(certs_mod.p52_certificate)),
    "p61": ("digit count of 125^100",
            "exact-certificate", _exact_body(certs_mod.p61_digits)),
    "p65": ("rationalize 1/(cbrt a + cbrt b + cbrt c)",
            "exact-certificate", _exact_body(certs_mod.p65_identity_check)),
    "p68": ("construct a square given one point on each side line",
            "construction", _construction_body(("p68",))),
    "p71": ("minimize the two areas cut off around a monotone graph",
            "oracle", _p71_body),
}


def problem_ids() -> list[str]:
    return sorted(PROBLEMS)


def verify(problem_id: str, seed: int = 0,
           figures_dir: Optional[Path] = None) -> VerificationReport:
    """Run one problem's verifier; deterministic for a fixed (id, seed)."""
    if problem_id not in PROBLEMS:
        raise UnknownProblem(problem_id)
    _, _, body = PROBLEMS[problem_id]
    return timed_report(problem_id, seed, lambda: body(seed, figures_dir))
