"""Shared value types, tolerances and errors."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi
FOUR_PI = 4.0 * np.pi


class InvalidInput(ValueError):
    """Raised when a value violates the invariant of its domain type."""


class SameCircleError(InvalidInput):
    """Two great circles coincide, so they have no unique intersection."""


class Group(enum.Enum):
    SO3 = "so3"
    SU2 = "su2"
    # rotations about the fixed z axis, angle kept in [0, 2pi)
    SO2 = "so2"


@dataclass(frozen=True)
class Tolerances:
    """Every numeric threshold used by the library, in one place."""

    validation: float = 1e-12
    oracle: float = 1e-9
    exact: float = 1e-14
    orthogonal_input: float = 1e-9
    # pole separation below which two arcs share a great circle; the exact
    # intersection stays accurate far below 1e-9
    same_circle: float = 1e-12
    # |tail ^ head| below this makes a turn's pole undefined
    degenerate_pole: float = 1e-12
    cli_unit: float = 1e-6


DEFAULT_TOL = Tolerances()


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def as_vector(v) -> np.ndarray:
    a = np.array(v, dtype=float).reshape(-1)
    if a.shape != (3,):
        raise InvalidInput(f"expected 3 components, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("vector has non-finite components")
    return a


def unit_vector(v, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate ``v`` as a point of the unit sphere and return a read-only copy."""
    a = as_vector(v)
    if abs(a @ a - 1.0) > tol.validation:
        raise InvalidInput(f"axis is not a unit vector (|n|^2 = {float(a @ a):.17g})")
    return _frozen(a)


def normalized(v) -> np.ndarray:
    a = as_vector(v)
    n = np.linalg.norm(a)
    if n == 0.0:
        raise InvalidInput("cannot normalize the zero vector")
    return _frozen(a / n)


SENTINEL_AXIS = _frozen(np.array([0.0, 0.0, 1.0]))
E1 = _frozen(np.array([1.0, 0.0, 0.0]))
E2 = _frozen(np.array([0.0, 1.0, 0.0]))
E3 = SENTINEL_AXIS

_ANGLE_RANGE = {Group.SO3: np.pi, Group.SU2: TWO_PI, Group.SO2: TWO_PI}


@dataclass(frozen=True, eq=False)
class AxisAngle:
    """Axis-angle pair; the group marker fixes the admissible angle range.

    SO3 angles lie in [0, pi], SU2 angles in [0, 2pi], SO2 angles in
    [0, 2pi) with the axis pinned to e3.  Use ``so3_canonicalize`` or
    ``su2_canonicalize`` to bring an arbitrary angle into range.
    """

    axis: np.ndarray
    angle: float
    group: Group = Group.SO3

    def __post_init__(self):
        object.__setattr__(self, "axis", unit_vector(self.axis))
        angle = float(self.angle)
        object.__setattr__(self, "angle", angle)
        hi = _ANGLE_RANGE[self.group]
        if not 0.0 <= angle <= hi:
            raise InvalidInput(
                f"{self.group.name} angle {float(angle):.17g} outside [0, {hi:.17g}]")

    def __repr__(self):
        x, y, z = self.axis
        return f"AxisAngle(axis=({x:.6g}, {y:.6g}, {z:.6g}), angle={self.angle:.6g}, group={self.group.name})"

    @property
    def is_identity_like(self) -> bool:
        """True when the axis carries no information (angle 0, or 2pi in SU2)."""
        return self.angle == 0.0 or (self.group is Group.SU2 and self.angle == TWO_PI)


def positive_sign(axis: np.ndarray, tol: float = DEFAULT_TOL.validation) -> np.ndarray:
    """Flip ``axis`` so that its first non-negligible component is positive."""
    for c in axis:
        if abs(c) > tol:
            return axis if c > 0 else _frozen(-axis)
    return axis


def cross(a, b) -> np.ndarray:
    # np.cross carries noticeable per-call overhead for single 3-vectors
    return np.array([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]])
