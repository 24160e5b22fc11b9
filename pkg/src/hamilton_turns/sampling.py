"""Seeded random draws of unit vectors, axis-angles and turns."""
from __future__ import annotations

import numpy as np

from .base import TWO_PI, AxisAngle, Group, cross
from .so3 import so3_canonicalize
from .su2 import su2_canonicalize


def random_unit(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return v / n


def random_orthogonal_pair(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    n = random_unit(rng)
    while True:
        u = cross(n, random_unit(rng))
        norm = np.linalg.norm(u)
        if norm > 1e-3:
            return n, u / norm


def random_axis_angle(rng: np.random.Generator, group: Group = Group.SO3) -> AxisAngle:
    n = random_unit(rng)
    if group is Group.SU2:
        return su2_canonicalize(n, rng.uniform(0.0, TWO_PI))
    return so3_canonicalize(n, rng.uniform(0.0, np.pi))
