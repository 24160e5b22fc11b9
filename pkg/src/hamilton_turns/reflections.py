"""Line reflections in the plane, plane reflections in space, and the
factorization of rotations into pairs of them."""
from __future__ import annotations

import numpy as np

from .base import (
    DEFAULT_TOL, E3, TWO_PI, AxisAngle, Group, InvalidInput, Tolerances,
    _frozen, cross, normalized, unit_vector,
)


def check_reflection(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Symmetric, involutory, det -1."""
    m = np.asarray(m, dtype=float)
    k = m.shape[0]
    if m.shape != (k, k) or k not in (2, 3):
        raise InvalidInput(f"reflection must be 2x2 or 3x3, got {m.shape}")
    if np.max(np.abs(m - m.T)) > tol.exact:
        raise InvalidInput("reflection is not symmetric")
    if np.max(np.abs(m @ m - np.eye(k))) > tol.exact:
        raise InvalidInput("reflection is not an involution")
    if abs(np.linalg.det(m) + 1.0) > tol.validation:
        raise InvalidInput("reflection does not have det -1")
    return m


def p0_2d(alpha: float) -> np.ndarray:
    """Reflection of the x-y plane about the line through 0 at angle ``alpha`` to x."""
    a = 2.0 * np.mod(alpha, np.pi)
    c, s = np.cos(a), np.sin(a)
    return _frozen(np.array([[c, s], [s, -c]]))


def apply_p0(alpha: float, p) -> np.ndarray:
    """xi -> exp(2i alpha) conj(xi), with xi = x + iy."""
    x, y = np.asarray(p, dtype=float)
    xi = np.exp(2j * np.mod(alpha, np.pi)) * complex(x, -y)
    return np.array([xi.real, xi.imag])


def compose_p0(beta: float, alpha: float) -> AxisAngle:
    """P0(beta) P0(alpha) as a rotation about e3 by 2 (beta - alpha) mod 2pi."""
    angle = float(np.mod(2.0 * (beta - alpha), TWO_PI))
    if angle >= TWO_PI:
        angle = 0.0
    return AxisAngle(E3, angle, Group.SO2)


def factor_so2(alpha: float, gauge_beta: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """R(e3; alpha) = P0(beta + alpha/2) P0(beta) for any beta."""
    return p0_2d(gauge_beta + 0.5 * alpha), p0_2d(gauge_beta)


def p0_3d(alpha: float) -> np.ndarray:
    m = np.eye(3)
    m[:2, :2] = p0_2d(alpha)
    return _frozen(m)


def p0_as_binary(alpha: float) -> AxisAngle:
    """Axis-angle of the binary rotation -P0(alpha); the (+sin, -cos) sign choice."""
    return AxisAngle(np.array([np.sin(alpha), -np.cos(alpha), 0.0]), np.pi, Group.SO3)


def plane_reflection(n, n1, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Reflection in the plane spanned by orthogonal unit vectors n and n1."""
    n, n1 = unit_vector(n, tol), unit_vector(n1, tol)
    if abs(n @ n1) > tol.orthogonal_input:
        raise InvalidInput(f"plane_reflection needs n . n1 = 0, got {n @ n1:.3e}")
    m = normalized(cross(n, n1))
    return _frozen(np.eye(3) - 2.0 * np.outer(m, m))


def gauge_vector(axis, gauge_theta: float = 0.0) -> np.ndarray:
    """A unit vector orthogonal to ``axis``, fixed by a deterministic rule.

    Start from the coordinate axis least aligned with ``axis`` (lowest index
    on ties), project out ``axis``, then turn it by ``gauge_theta`` about
    ``axis``.
    """
    n = unit_vector(axis)
    k = int(np.argmin(np.abs(n)))
    u = -n[k] * n
    u[k] += 1.0
    u = u / np.linalg.norm(u)
    if gauge_theta == 0.0:
        return _frozen(u)
    return normalized(np.cos(gauge_theta) * u + np.sin(gauge_theta) * cross(n, u))


def arc_endpoints(axis, half_angle: float, gauge_theta: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """(n1, n2) with n1 orthogonal to ``axis`` and n2 = R(axis; half_angle) n1."""
    n = unit_vector(axis)
    n1 = gauge_vector(n, gauge_theta)
    n2 = np.cos(half_angle) * n1 + np.sin(half_angle) * cross(n, n1)
    return n1, normalized(n2)


def factor_so3(a: AxisAngle, gauge_theta: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Split R(n; alpha) into a pair (n1, n2) with n1.n2 = cos(alpha/2) and
    n1 ^ n2 = n sin(alpha/2), so that

        R(n; alpha) = R(n2; pi) R(n1; pi) = P(n; n2) P(n; n1).

    For the identity the pair degenerates to (u, u).
    """
    if a.group is Group.SU2:
        raise InvalidInput("factor_so3 takes an SO3 axis-angle")
    return arc_endpoints(a.axis, 0.5 * a.angle, gauge_theta)
