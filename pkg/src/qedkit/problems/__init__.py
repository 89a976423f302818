"""Per-problem verifiers and the dispatch registry."""

from .certificates import (p01_certificate, p12_roots, p17_solutions,
                           p38_certificate, p42_points, p52_certificate,
                           p61_digits, p65_identity_check)
from .constructions import (CONSTRUCTION_IDS, construction_viewport,
                            default_instance, load_program, p30_locus_check,
                            render_construction, run_construction)
from .oracles import (DomainError, GenerationFailed, InfeasibleSides,
                      LevelsNotAttained, p07_probe, p26_angles, p31_instance,
                      p45_search, p49_compare, p71_probe)
from .registry import PROBLEMS, UnknownProblem, problem_ids, verify
from .report import Certificate, ExactInterval, VerificationReport

__all__ = [
    "CONSTRUCTION_IDS",
    "Certificate",
    "DomainError",
    "ExactInterval",
    "GenerationFailed",
    "InfeasibleSides",
    "LevelsNotAttained",
    "PROBLEMS",
    "UnknownProblem",
    "VerificationReport",
    "construction_viewport",
    "default_instance",
    "load_program",
    "p01_certificate",
    "p07_probe",
    "p12_roots",
    "p17_solutions",
    "p26_angles",
    "p30_locus_check",
    "p31_instance",
    "p38_certificate",
    "p42_points",
    "p45_search",
    "p49_compare",
    "p52_certificate",
    "p61_digits",
    "p65_identity_check",
    "p71_probe",
    "problem_ids",
    "render_construction",
    "run_construction",
    "verify",
]
