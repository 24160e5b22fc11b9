"""Defining representation of SO(3).

Rotation matrices are plain ``(3, 3)`` float arrays, returned read-only.
"""
from __future__ import annotations

import numpy as np

from .base import (
    DEFAULT_TOL, SENTINEL_AXIS, TWO_PI, AxisAngle, Group, InvalidInput,
    Tolerances, _frozen, cross, positive_sign, unit_vector,
)

I3 = _frozen(np.eye(3))


def check_rotation(R, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Return ``R`` as a read-only array after checking R^T R = 1 and det R = 1."""
    m = np.array(R, dtype=float)
    if m.shape != (3, 3):
        raise InvalidInput(f"rotation matrix must be 3x3, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidInput("rotation matrix has non-finite entries")
    drift = np.max(np.abs(m.T @ m - np.eye(3)))
    if drift > tol.validation:
        raise InvalidInput(f"matrix is not orthogonal (max |R^T R - 1| = {drift:.3e})")
    det = np.linalg.det(m)
    if abs(det - 1.0) > tol.validation:
        raise InvalidInput(f"matrix is not proper (det = {float(det):.17g})")
    return _frozen(m)


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """Closed-form right-handed rotation by ``angle`` about ``axis``, any real angle.

    R_jk = delta_jk cos a + n_j n_k (1 - cos a) - eps_jkl n_l sin a
    """
    n = unit_vector(axis)
    c, s = np.cos(angle), np.sin(angle)
    x, y, z = n
    # -eps_jkl n_l written out
    skew = np.array([[0.0, -z, y],
                     [z, 0.0, -x],
                     [-y, x, 0.0]])
    return _frozen(c * np.eye(3) + (1.0 - c) * np.outer(n, n) + s * skew)


def so3_canonicalize(axis, angle: float) -> AxisAngle:
    """Reduce ``angle`` into [0, pi], flipping the axis when the reduced angle exceeds pi."""
    n = unit_vector(axis)
    a = float(np.mod(angle, TWO_PI))
    if a >= TWO_PI:  # np.mod can round up to the modulus for tiny negatives
        a = 0.0
    if a > np.pi:
        n, a = _frozen(-n), TWO_PI - a
    if a == 0.0:
        return AxisAngle(SENTINEL_AXIS, 0.0, Group.SO3)
    if a == np.pi:
        n = positive_sign(n)
    return AxisAngle(n, a, Group.SO3)


def so3_from_axis_angle(a: AxisAngle) -> np.ndarray:
    if a.group is Group.SU2:
        raise InvalidInput("so3_from_axis_angle needs an SO3 (or SO2) axis-angle")
    return rotation_matrix(a.axis, a.angle)


def so3_to_axis_angle(R, tol: Tolerances = DEFAULT_TOL) -> AxisAngle:
    """Canonical axis-angle of a rotation matrix.

    The angle comes from atan2 of the antisymmetric and symmetric parts,
    which is well conditioned over the whole range.  Below pi/2 the axis is
    read off the antisymmetric part; above it the axis is the dominant
    column of the symmetric part (1 - cos a) n n^T, with its sign taken from
    the antisymmetric part whenever that is resolvable.
    """
    m = check_rotation(R, tol)
    anti = np.array([m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1]])
    s2 = np.linalg.norm(anti)  # 2 sin a
    c = 0.5 * (np.trace(m) - 1.0)
    angle = float(np.arctan2(0.5 * s2, c))

    if c >= 0.0:
        if s2 == 0.0:
            return AxisAngle(SENTINEL_AXIS, 0.0, Group.SO3)
        return AxisAngle(anti / s2, angle, Group.SO3)

    sym = 0.5 * (m + m.T) - c * np.eye(3)
    k = int(np.argmax(np.diag(sym)))
    n = sym[:, k] / np.linalg.norm(sym[:, k])
    d = n @ anti
    if abs(d) > tol.validation:
        if d < 0.0:
            n = -n
    else:
        angle = np.pi
        n = positive_sign(n)
    return AxisAngle(n, angle, Group.SO3)


def binary_rotation(axis) -> np.ndarray:
    """Rotation by pi about ``axis``: 2 n n^T - 1.  Even in ``axis``."""
    n = unit_vector(axis)
    return _frozen(2.0 * np.outer(n, n) - np.eye(3))


def so3_compose(Rp, R, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Product ``Rp @ R`` (R acts first).  Raises if the result drifts off SO(3)."""
    a = check_rotation(Rp, tol)
    b = check_rotation(R, tol)
    try:
        return check_rotation(a @ b, tol)
    except InvalidInput as exc:
        raise InvalidInput(f"composition left SO(3): {exc}") from None


def rodrigues_compose(ap: AxisAngle, a: AxisAngle) -> AxisAngle:
    """Axis-angle of R(ap) R(a) from the half-angle algebra, canonicalized."""
    for x in (ap, a):
        if x.group is Group.SU2:
            raise InvalidInput("rodrigues_compose takes SO3 axis-angles")
    c, s = np.cos(0.5 * a.angle), np.sin(0.5 * a.angle)
    cp, sp = np.cos(0.5 * ap.angle), np.sin(0.5 * ap.angle)
    n, n_p = a.axis, ap.axis
    w = cp * c - sp * s * (n_p @ n)
    v = s * cp * n + sp * c * n_p + sp * s * cross(n_p, n)
    norm_v = np.linalg.norm(v)
    if norm_v == 0.0:
        return so3_canonicalize(SENTINEL_AXIS, 0.0)
    return so3_canonicalize(v / norm_v, 2.0 * np.arctan2(norm_v, w))
