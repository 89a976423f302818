"""Verification reports: per-problem outcome with its certificate list."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..exactnum import ExactReal, Ordering, compare

__all__ = ["Certificate", "ExactInterval", "VerificationReport", "timed_report"]


@dataclass(frozen=True)
class Certificate:
    claim: str
    kind: str  # "exact" | "numeric"
    witness: str
    passed: bool

    def to_json_dict(self) -> dict:
        return {"claim": self.claim, "kind": self.kind,
                "witness": self.witness, "passed": self.passed}


@dataclass(frozen=True)
class ExactInterval:
    """Closed/open interval with constructible endpoints."""

    lo: ExactReal
    hi: ExactReal
    closed_lo: bool = True
    closed_hi: bool = True

    def __post_init__(self) -> None:
        if compare(self.lo, self.hi) == Ordering.GREATER:
            raise ValueError("interval endpoints out of order")

    def __repr__(self) -> str:
        lb = "[" if self.closed_lo else "("
        rb = "]" if self.closed_hi else ")"
        return f"{lb}{self.lo.to_decimal()}, {self.hi.to_decimal()}{rb}"


@dataclass
class VerificationReport:
    problem: str
    status: str  # "pass" | "fail" | "error"
    certificates: list[Certificate] = field(default_factory=list)
    figures: list[str] = field(default_factory=list)
    seed: int = 0
    elapsed_ms: float = 0.0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        """Deterministic report content; timing is reported separately."""
        out = {
            "problem": self.problem,
            "status": self.status,
            "certificates": [c.to_json_dict() for c in self.certificates],
            "figures": self.figures,
            "seed": self.seed,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def timed_report(problem: str, seed: int,
                 body: Callable[[], tuple[list[Certificate], list[str]]]) -> VerificationReport:
    """Run a verifier body, derive the status, and time it.

    The body returns (certificates, figure paths); any exception becomes an
    error report instead of aborting the batch.
    """
    start = time.perf_counter()
    try:
        certificates, figures = body()
        status = "pass" if all(c.passed for c in certificates) else "fail"
        report = VerificationReport(problem, status, certificates, figures, seed)
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        report = VerificationReport(problem, "error", [], [], seed,
                                    error=f"{type(exc).__name__}: {exc}")
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report
