"""Minimal numeric 3-D helpers (double precision), used only where the
verified claim is spatial."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = ["Point3", "coplanarity_defect"]


@dataclass(frozen=True)
class Point3:
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError("Point3 coordinates must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


def coplanarity_defect(p1: Point3, p2: Point3, p3: Point3, p4: Point3) -> float:
    """Scale-invariant coplanarity residual of four points.

    |det of the homogeneous 4x4 matrix| divided by the cube of the geometric
    mean of the six pairwise distances; exactly 0 iff the points are coplanar,
    invariant under rigid motions and global scaling.
    """
    pts = [p.as_array() for p in (p1, p2, p3, p4)]
    mat = np.ones((4, 4))
    for i, p in enumerate(pts):
        mat[i, :3] = p
    det = abs(float(np.linalg.det(mat)))
    dists = [float(np.linalg.norm(a - b)) for a, b in combinations(pts, 2)]
    if min(dists) == 0.0:
        return 0.0 if det == 0.0 else det
    gmean = math.exp(sum(math.log(d) for d in dists) / len(dists))
    return det / gmean ** 3
