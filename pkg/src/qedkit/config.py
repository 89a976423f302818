"""Artifact-wide numeric tolerances.

Exact assertions never use a tolerance; these constants govern only the
numeric-oracle side (generated instances, high-precision evaluations,
sampled comparisons).
"""

GEOM_TOL = 1e-9      # geometric residuals: coplanarity, angle agreement, sampling slack
EVAL_TOL = 1e-12     # high-precision evaluation residuals
QUAD_TOL = 1e-10     # adaptive quadrature target
SOLVER_TOL = 1e-10   # constrained-generation residual target
