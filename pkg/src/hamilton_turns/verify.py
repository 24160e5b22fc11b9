"""Randomized identity sweeps backing the ``verify`` subcommand.

Every suite draws from its own generator seeded by (seed, suite index), so
results do not depend on which other suites run or in what order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import reflections as refl
from . import so3, su2, turns
from .base import DEFAULT_TOL, TWO_PI, AxisAngle, Group, cross, normalized
from .sampling import random_axis_angle, random_orthogonal_pair, random_unit


@dataclass(frozen=True)
class SuiteResult:
    name: str
    samples: int
    max_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tol)


def axis_angle_error(a: AxisAngle, b: AxisAngle, angle_floor: float = 1e-9) -> float:
    """max(|delta angle|, 1 - axis.axis'), ignoring the axis when the element is
    (near) identity and allowing the axis sign flip at an SO3 angle of pi."""
    err = abs(a.angle - b.angle)
    if a.group is Group.SU2:
        if min(a.angle, b.angle) <= angle_floor or max(a.angle, b.angle) >= TWO_PI - angle_floor:
            return err
    elif min(a.angle, b.angle) <= angle_floor:
        return err
    dot = float(a.axis @ b.axis)
    if a.group is Group.SO3 and min(a.angle, b.angle) >= np.pi - angle_floor:
        dot = abs(dot)
    return max(err, 1.0 - dot)


def _canonical_forms(rng, n):
    err = 0.0
    for _ in range(n):
        axis, alpha = random_unit(rng), rng.uniform(0.0, np.pi)
        R = so3.rotation_matrix(axis, alpha)
        err = max(err,
                  np.abs(so3.rotation_matrix(axis, alpha + TWO_PI) - R).max(),
                  np.abs(so3.rotation_matrix(-axis, TWO_PI - alpha) - R).max())
    return err


def _binary_involution(rng, n):
    err = 0.0
    for _ in range(n):
        B = so3.binary_rotation(random_unit(rng))
        err = max(err, np.abs(B @ B - np.eye(3)).max())
    return err


def _so2_reflections(rng, n):
    err = 0.0
    for _ in range(n):
        alpha, beta = rng.uniform(0.0, TWO_PI, size=2)
        lhs = refl.p0_2d(beta) @ refl.p0_2d(alpha)
        rhs = so3.so3_from_axis_angle(refl.compose_p0(beta, alpha))[:2, :2]
        err = max(err, np.abs(lhs - rhs).max())
    return err


def _plane_factorization(rng, n):
    err = 0.0
    for _ in range(n):
        a = random_axis_angle(rng)
        n1, n2 = refl.factor_so3(a, rng.uniform(0.0, TWO_PI))
        lhs = refl.plane_reflection(a.axis, n2) @ refl.plane_reflection(a.axis, n1)
        err = max(err, np.abs(lhs - so3.so3_from_axis_angle(a)).max())
    return err


def _plane_is_negative_binary(rng, n):
    err = 0.0
    for _ in range(n):
        m, m1 = random_orthogonal_pair(rng)
        P = refl.plane_reflection(m, m1)
        B = so3.binary_rotation(normalized(cross(m, m1)))
        err = max(err, np.abs(P + B).max())
    return err


def _binary_factorization(rng, n):
    err = 0.0
    for _ in range(n):
        a = random_axis_angle(rng)
        n1, n2 = refl.factor_so3(a, rng.uniform(0.0, TWO_PI))
        R = so3.so3_from_axis_angle(a)
        for s1 in (1.0, -1.0):
            for s2 in (1.0, -1.0):
                lhs = so3.binary_rotation(s2 * n2) @ so3.binary_rotation(s1 * n1)
                err = max(err, np.abs(lhs - R).max())
    return err


def _su2_binary_factorization(rng, n):
    err = 0.0
    for _ in range(n):
        a = random_axis_angle(rng, Group.SU2)
        n1, n2 = refl.arc_endpoints(a.axis, 0.5 * a.angle, rng.uniform(0.0, TWO_PI))
        U = su2.su2_from_axis_angle(a)
        err = max(err, np.abs(turns.binary_pair_su2(n1, n2).quaternion - U.quaternion).max())
    return err


def _double_cover(rng, n):
    err = 0.0
    for _ in range(n):
        U = su2.su2_from_axis_angle(random_axis_angle(rng, Group.SU2))
        Up = su2.su2_from_axis_angle(random_axis_angle(rng, Group.SU2))
        err = max(err,
                  np.abs(su2.phi(Up @ U) - su2.phi(Up) @ su2.phi(U)).max(),
                  np.abs(su2.phi(-U) - su2.phi(U)).max())
    return err


def _rodrigues(rng, n):
    err = 0.0
    for _ in range(n):
        a, ap = random_axis_angle(rng), random_axis_angle(rng)
        got = so3.so3_from_axis_angle(so3.rodrigues_compose(ap, a))
        want = so3.so3_from_axis_angle(ap) @ so3.so3_from_axis_angle(a)
        err = max(err, np.abs(got - want).max())
    return err


def _turns_so3(rng, n):
    err = 0.0
    for _ in range(n):
        a, ap = random_axis_angle(rng), random_axis_angle(rng)
        t = turns.turn_from_axis_angle(a, rng.uniform(0.0, TWO_PI))
        tp = turns.turn_from_axis_angle(ap, rng.uniform(0.0, TWO_PI))
        got = turns.turn_to_group(turns.turn_compose(tp, t))
        want = so3.so3_to_axis_angle(so3.so3_compose(so3.so3_from_axis_angle(ap),
                                                     so3.so3_from_axis_angle(a)))
        err = max(err, axis_angle_error(got, want))
    return err


def _turns_su2(rng, n):
    err = 0.0
    for _ in range(n):
        a, ap = random_axis_angle(rng, Group.SU2), random_axis_angle(rng, Group.SU2)
        t = turns.turn_from_axis_angle(a, rng.uniform(0.0, TWO_PI))
        tp = turns.turn_from_axis_angle(ap, rng.uniform(0.0, TWO_PI))
        got = turns.turn_element(turns.turn_compose(tp, t))
        want = su2.su2_compose(su2.su2_from_axis_angle(ap), su2.su2_from_axis_angle(a))
        err = max(err, np.abs(got.quaternion - want.quaternion).max())
    return err


def _slide(rng, n):
    err = 0.0
    for _ in range(n):
        group = Group.SU2 if rng.uniform() < 0.5 else Group.SO3
        a = random_axis_angle(rng, group)
        t = turns.turn_from_axis_angle(a, rng.uniform(0.0, TWO_PI))
        q = turns.turn_element(t).quaternion
        slid = turns.turn_element(turns.slide(t, rng.uniform(-TWO_PI, TWO_PI))).quaternion
        other_gauge = turns.turn_element(
            turns.turn_from_axis_angle(a, rng.uniform(0.0, TWO_PI))).quaternion
        err = max(err, np.abs(slid - q).max(), np.abs(other_gauge - q).max())
    return err


def _normalize(rng, n):
    # excess of the normalized arc over pi/2, or of the raw arc over the sum
    err = 0.0
    for _ in range(n):
        t = turns.turn_from_axis_angle(random_axis_angle(rng), rng.uniform(0.0, TWO_PI))
        tp = turns.turn_from_axis_angle(random_axis_angle(rng), rng.uniform(0.0, TWO_PI))
        raw = turns.turn_compose(tp, t)
        norm = turns.normalize_turn_so3(raw)
        err = max(err, norm.arc - 0.5 * np.pi, raw.arc - (t.arc + tp.arc))
        if not turns.turn_equivalent(raw, norm):
            err = max(err, np.inf)
    return max(err, 0.0)


_tol = DEFAULT_TOL
SUITES: list[tuple[str, Callable, float]] = [
    ("canonicalization", _canonical_forms, _tol.exact),
    ("binary-involution", _binary_involution, _tol.exact),
    ("so2-reflection-law", _so2_reflections, _tol.exact),
    ("plane-reflection-factorization", _plane_factorization, _tol.validation),
    ("plane-reflection-is-negative-binary", _plane_is_negative_binary, _tol.exact),
    ("binary-factorization", _binary_factorization, _tol.validation),
    ("su2-binary-factorization", _su2_binary_factorization, _tol.validation),
    ("double-cover", _double_cover, _tol.validation),
    ("rodrigues-vs-matrix", _rodrigues, _tol.validation),
    ("turn-composition-so3", _turns_so3, _tol.oracle),
    ("turn-composition-su2", _turns_su2, _tol.oracle),
    ("slide-gauge-invariance", _slide, _tol.validation),
    ("arc-normalization", _normalize, _tol.validation),
]


def run_suites(samples: int, seed: int, tol: float | None = None) -> list[SuiteResult]:
    if samples <= 0:
        return []
    results = []
    for idx, (name, fn, default_tol) in enumerate(SUITES):
        rng = np.random.default_rng([seed % 2**64, idx])
        err = float(fn(rng, samples))
        results.append(SuiteResult(name, samples, err, default_tol if tol is None else tol))
    return results
