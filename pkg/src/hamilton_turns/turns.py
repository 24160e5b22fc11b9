"""Turns: directed great-circle arcs standing for SO(3) and SU(2) elements.

A turn running from ``tail`` to ``head`` represents

    SO(3):  R(head; pi) R(tail; pi)
    SU(2): -U(head; pi) U(tail; pi)

i.e. a rotation about the pole ``tail ^ head`` by twice the arc length.
Sliding both endpoints along their common great circle leaves the element
unchanged, and composition is tail-to-head concatenation after sliding the
two arcs so that they meet where their great circles cross.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .base import (
    DEFAULT_TOL, AxisAngle, Group, InvalidInput, SameCircleError, Tolerances,
    _frozen, cross, normalized, unit_vector,
)
from .reflections import arc_endpoints
from .so3 import rotation_matrix, so3_canonicalize
from .su2 import SU2Element, su2_compose, su2_to_axis_angle


@dataclass(frozen=True, eq=False)
class Turn:
    tail: np.ndarray
    head: np.ndarray
    group: Group = Group.SO3

    def __post_init__(self):
        if self.group not in (Group.SO3, Group.SU2):
            raise InvalidInput("a turn is marked SO3 or SU2")
        object.__setattr__(self, "tail", unit_vector(self.tail))
        object.__setattr__(self, "head", unit_vector(self.head))

    def __repr__(self):
        t = ", ".join(f"{c:.6g}" for c in self.tail)
        h = ", ".join(f"{c:.6g}" for c in self.head)
        return f"Turn(({t}) -> ({h}), {self.group.name})"

    @property
    def arc(self) -> float:
        """Great-circle length from tail to head, in [0, pi]."""
        return float(np.arctan2(np.linalg.norm(cross(self.tail, self.head)),
                                self.tail @ self.head))

    @property
    def pole(self) -> np.ndarray | None:
        """Unit normal of the arc's great circle, or None when tail = +-head."""
        c = cross(self.tail, self.head)
        n = np.linalg.norm(c)
        if n < DEFAULT_TOL.degenerate_pole:
            return None
        return _frozen(c / n)

    def is_identity(self, tol: Tolerances = DEFAULT_TOL) -> bool:
        return _degenerate(self, tol) and self.tail @ self.head > 0.0

    def is_antipodal(self, tol: Tolerances = DEFAULT_TOL) -> bool:
        return _degenerate(self, tol) and self.tail @ self.head < 0.0


def _degenerate(t: Turn, tol: Tolerances) -> bool:
    return np.linalg.norm(cross(t.tail, t.head)) < tol.degenerate_pole


def binary_pair_su2(tail, head) -> SU2Element:
    """-U(head; pi) U(tail; pi), with U(n; pi) = -i n.sigma taken exactly."""
    Uh = SU2Element(0.0, unit_vector(head))
    Ut = SU2Element(0.0, unit_vector(tail))
    return -su2_compose(Uh, Ut)


def turn_element(t: Turn, tol: Tolerances = DEFAULT_TOL) -> SU2Element:
    """The (w, v) pair of a turn: exact for SU2, one of the two lifts for SO3."""
    if t.group is Group.SO3 and t.is_antipodal(tol):
        raise InvalidInput("SO3 turn with antipodal endpoints has no great circle")
    return binary_pair_su2(t.tail, t.head)


def turn_from_axis_angle(a: AxisAngle, gauge_theta: float = 0.0) -> Turn:
    group = Group.SU2 if a.group is Group.SU2 else Group.SO3
    if a.group is Group.SO2:
        a = so3_canonicalize(a.axis, a.angle)
    tail, head = arc_endpoints(a.axis, 0.5 * a.angle, gauge_theta)
    return Turn(tail, head, group)


def turn_to_group(t: Turn, tol: Tolerances = DEFAULT_TOL) -> AxisAngle:
    """Group element of ``t`` in canonical axis-angle form."""
    U = turn_element(t, tol)
    if t.group is Group.SU2:
        return su2_to_axis_angle(U)
    norm_v = np.linalg.norm(U.v)
    angle = 2.0 * np.arctan2(norm_v, U.w)
    axis = U.v / norm_v if norm_v > 0.0 else np.array([0.0, 0.0, 1.0])
    return so3_canonicalize(axis, angle)


def slide(t: Turn, theta: float) -> Turn:
    """Move both endpoints by ``theta`` along the arc's great circle."""
    pole = t.pole
    if pole is None or theta == 0.0:
        return t
    R = rotation_matrix(pole, theta)
    return Turn(normalized(R @ t.tail), normalized(R @ t.head), t.group)


def _exact_cross(a, b) -> np.ndarray:
    # rounding only once per component keeps nearly parallel inputs usable
    a = [Fraction(float(x)) for x in a]
    b = [Fraction(float(x)) for x in b]
    return np.array([float(a[1] * b[2] - a[2] * b[1]),
                     float(a[2] * b[0] - a[0] * b[2]),
                     float(a[0] * b[1] - a[1] * b[0])])


def great_circle_intersection(pole_a, pole_b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """The intersection point (pole_a ^ pole_b)/|pole_a ^ pole_b| of two great circles."""
    c = _exact_cross(unit_vector(pole_a), unit_vector(pole_b))
    n = np.linalg.norm(c)
    if n < tol.same_circle:
        raise SameCircleError("poles are parallel; the great circles coincide")
    return normalized(c)


def _negate(t: Turn) -> Turn:
    return Turn(t.tail, -t.head, t.group)


def turn_compose(tp: Turn, t: Turn, tol: Tolerances = DEFAULT_TOL) -> Turn:
    """Turn of the product tp * t (``t`` acts first).

    The arcs are slid so that t ends where tp starts; the result runs from
    the tail of t to the head of tp.  SO3 results are left unnormalized
    (arc may exceed pi/2) except that an antipodal result is folded to the
    identity turn.
    """
    if tp.group is not t.group:
        raise InvalidInput("cannot compose turns of different groups")
    if t.group is Group.SO3:
        for x in (t, tp):
            if x.is_antipodal(tol):
                raise InvalidInput("SO3 turn with antipodal endpoints has no great circle")
    if t.is_identity(tol):
        return tp
    if tp.is_identity(tol):
        return t
    # -1 is central in SU(2): flipping one head negates the element
    if t.is_antipodal(tol):
        return _negate(tp)
    if tp.is_antipodal(tol):
        return _negate(t)

    pole_t, pole_tp = t.pole, tp.pole
    if np.linalg.norm(cross(pole_t, pole_tp)) < tol.same_circle:
        c = t.head
    else:
        c = great_circle_intersection(pole_t, pole_tp, tol)
    # Both slid arcs are rebuilt from the shared point c, so they meet exactly
    # even when a short arc's pole is only known to ~eps/arc.
    tail = normalized(rotation_matrix(pole_t, -t.arc) @ c)
    head = normalized(rotation_matrix(pole_tp, tp.arc) @ c)

    result = Turn(tail, head, t.group)
    if result.group is Group.SO3 and result.is_antipodal(tol):
        return _negate(result)
    return result


def turn_equivalent(t1: Turn, t2: Turn, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when both turns denote the same group element."""
    if t1.group is not t2.group:
        raise InvalidInput("cannot compare turns of different groups")
    q1 = turn_element(t1, tol).quaternion
    q2 = turn_element(t2, tol).quaternion
    err = np.max(np.abs(q1 - q2))
    if t1.group is Group.SO3:
        err = min(err, np.max(np.abs(q1 + q2)))
    return bool(err <= tol.oracle)


def normalize_turn_so3(t: Turn) -> Turn:
    """Bring an SO3 turn's arc to at most pi/2 by flipping its head."""
    if t.group is not Group.SO3:
        raise InvalidInput("normalize_turn_so3 applies to SO3 turns only")
    if t.arc <= 0.5 * np.pi:
        return t
    return _negate(t)


def arc_points(t: Turn, count: int) -> np.ndarray:
    """``count`` points spaced evenly in arc length from tail to head, inclusive.

    Degenerate turns (no pole) yield the tail repeated.
    """
    if count < 2:
        raise InvalidInput("arc_points needs count >= 2")
    pole = t.pole
    if pole is None:
        return np.tile(t.tail, (count, 1))
    side = cross(pole, t.tail)
    s = np.linspace(0.0, t.arc, count)[:, None]
    pts = np.cos(s) * t.tail + np.sin(s) * side
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    pts[0], pts[-1] = t.tail, t.head
    return pts
