"""Defining representation of SU(2) and the covering map onto SO(3).

Elements are stored as four reals ``(w, v)`` standing for the matrix
``U = w 1 - i v.sigma``.  The 2x2 complex matrix is only a derived view.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import (
    DEFAULT_TOL, FOUR_PI, SENTINEL_AXIS, TWO_PI, AxisAngle, Group, InvalidInput,
    Tolerances, _frozen, as_vector, cross, unit_vector,
)
from .so3 import check_rotation, so3_to_axis_angle

SIGMA = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)
SIGMA.flags.writeable = False


def pauli_dot(a) -> np.ndarray:
    """The 2x2 matrix a.sigma."""
    return np.tensordot(as_vector(a), SIGMA, axes=1)


@dataclass(frozen=True, eq=False)
class SU2Element:
    w: float
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "v", _frozen(as_vector(self.v)))
        norm2 = self.w * self.w + self.v @ self.v
        if abs(norm2 - 1.0) > DEFAULT_TOL.validation:
            raise InvalidInput(f"SU(2) element is not unit norm (w^2 + |v|^2 = {float(norm2):.17g})")

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0, np.zeros(3))

    @classmethod
    def from_quaternion(cls, q) -> "SU2Element":
        q = np.asarray(q, dtype=float)
        return cls(q[0], q[1:])

    @property
    def quaternion(self) -> np.ndarray:
        return np.concatenate(([self.w], self.v))

    def matrix(self) -> np.ndarray:
        w, (x, y, z) = self.w, self.v
        return np.array([[w - 1j * z, -y - 1j * x],
                         [y - 1j * x, w + 1j * z]])

    def __neg__(self) -> "SU2Element":
        return SU2Element(-self.w, -self.v)

    def __matmul__(self, other: "SU2Element") -> "SU2Element":
        return su2_compose(self, other)

    def __repr__(self):
        x, y, z = self.v
        return f"SU2Element(w={self.w:.6g}, v=({x:.6g}, {y:.6g}, {z:.6g}))"


def su2_element(axis, angle: float) -> SU2Element:
    """cos(a/2) - i n.sigma sin(a/2) for any real angle."""
    n = unit_vector(axis)
    half = 0.5 * angle
    return SU2Element(np.cos(half), np.sin(half) * n)


def su2_canonicalize(axis, angle: float) -> AxisAngle:
    """Reduce ``angle`` mod 4pi into [0, 2pi] using U(n; a) = U(-n; 4pi - a)."""
    n = unit_vector(axis)
    a = float(np.mod(angle, FOUR_PI))
    if a >= FOUR_PI:
        a = 0.0
    if a > TWO_PI:
        n, a = -n, FOUR_PI - a
    if a == 0.0 or a == TWO_PI:
        n = SENTINEL_AXIS
    return AxisAngle(n, a, Group.SU2)


def su2_from_axis_angle(a: AxisAngle) -> SU2Element:
    return su2_element(a.axis, a.angle)


def su2_to_axis_angle(U: SU2Element) -> AxisAngle:
    norm_v = np.linalg.norm(U.v)
    angle = 2.0 * float(np.arctan2(norm_v, U.w))
    if norm_v == 0.0:
        return AxisAngle(SENTINEL_AXIS, angle, Group.SU2)
    return AxisAngle(U.v / norm_v, angle, Group.SU2)


def su2_compose(Up: SU2Element, U: SU2Element) -> SU2Element:
    """Product Up U, expanded with the Pauli product rule."""
    w = Up.w * U.w - Up.v @ U.v
    v = Up.w * U.v + U.w * Up.v + cross(Up.v, U.v)
    return SU2Element(w, v)


def pauli_product(a, b) -> tuple[float, np.ndarray]:
    """(a.sigma)(b.sigma) = (a.b) 1 + i (a ^ b).sigma, returned as (a.b, a ^ b)."""
    a, b = as_vector(a), as_vector(b)
    return float(a @ b), cross(a, b)


def phi(U: SU2Element) -> np.ndarray:
    """The covering homomorphism SU(2) -> SO(3).

    Closed form of 1/2 tr(sigma_j U sigma_k U^dagger) in terms of (w, v);
    every term is even in (w, v), so phi(U) and phi(-U) agree bit for bit.
    """
    w, v = U.w, U.v
    x, y, z = v
    skew = np.array([[0.0, -z, y],
                     [z, 0.0, -x],
                     [-y, x, 0.0]])
    R = (w * w - v @ v) * np.eye(3) + 2.0 * np.outer(v, v) + 2.0 * w * skew
    return _frozen(R)


def phi_trace(U: SU2Element) -> np.ndarray:
    """phi evaluated literally as 1/2 tr(sigma_j U sigma_k U^dagger) on the matrix view."""
    M = U.matrix()
    Md = M.conj().T
    R = np.empty((3, 3))
    for j in range(3):
        for k in range(3):
            R[j, k] = 0.5 * np.trace(SIGMA[j] @ M @ SIGMA[k] @ Md).real
    return R


def lift(R, tol: Tolerances = DEFAULT_TOL) -> tuple[SU2Element, SU2Element]:
    """Both preimages of ``R``; the first comes from the canonical angle in [0, pi]."""
    a = so3_to_axis_angle(check_rotation(R, tol), tol)
    U = su2_element(a.axis, a.angle)
    return U, -U
