import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from hamilton_turns import (
    E1, E2, E3, SENTINEL_AXIS, AxisAngle, Group, InvalidInput, apply_p0,
    binary_rotation, compose_p0, factor_so2, factor_so3, p0_2d, p0_3d,
    p0_as_binary, plane_reflection, rotation_matrix, so3_from_axis_angle,
)
from hamilton_turns.base import cross
from hamilton_turns.reflections import check_reflection, gauge_vector
from hamilton_turns.sampling import random_axis_angle, random_orthogonal_pair, random_unit

R2 = np.sqrt(2) / 2


def rot2(a):
    return np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])


class TestP0:
    def test_values(self):
        assert_allclose(p0_2d(0.0), np.diag([1.0, -1.0]), atol=1e-16)
        assert_allclose(p0_2d(np.pi / 4), [[0, 1], [1, 0]], atol=1e-16)
        assert_array_equal(p0_2d(np.pi), p0_2d(0.0))

    def test_reflection_invariants(self, rng):
        for a in rng.uniform(-10, 10, size=200):
            check_reflection(p0_2d(a))
            check_reflection(p0_3d(a))

    def test_apply_matches_matrix(self, rng):
        for _ in range(200):
            a, p = rng.uniform(-5, 5), rng.normal(size=2)
            assert np.abs(apply_p0(a, p) - p0_2d(a) @ p).max() <= 1e-14 * max(1, np.abs(p).max())

    def test_apply_values(self):
        assert_allclose(apply_p0(0.0, (1, 1)), (1, -1))
        assert_allclose(apply_p0(np.pi / 4, (1, 0)), (0, 1), atol=1e-16)

    def test_apply_twice_is_identity(self, rng):
        for _ in range(100):
            a, p = rng.uniform(-5, 5), rng.normal(size=2)
            assert_allclose(apply_p0(a, apply_p0(a, p)), p, atol=1e-14)

    def test_3d_embedding(self):
        assert_allclose(p0_3d(0.0), np.diag([1.0, -1.0, 1.0]), atol=1e-16)
        assert_allclose(p0_3d(np.pi / 4), [[0, 1, 0], [1, 0, 0], [0, 0, 1]], atol=1e-16)
        assert np.linalg.det(p0_3d(1.234)) == pytest.approx(-1.0, abs=1e-12)


class TestComposeP0:
    def test_equal_lines(self):
        assert compose_p0(0.7, 0.7).angle == 0.0

    def test_quarter_turn(self):
        a = compose_p0(np.pi / 4, 0.0)
        assert a.group is Group.SO2
        assert a.angle == pytest.approx(np.pi / 2)
        assert_array_equal(a.axis, E3)

    def test_reversed_order(self):
        a = compose_p0(0.0, np.pi / 4)
        assert a.angle == pytest.approx(3 * np.pi / 2)
        M = p0_2d(0.0) @ p0_2d(np.pi / 4)
        assert_allclose(M, rot2(3 * np.pi / 2), atol=1e-15)
        assert_allclose(so3_from_axis_angle(a)[:2, :2], M, atol=1e-15)

    def test_reflection_law_on_grid(self):
        grid = np.arange(16) * np.pi / 8
        for a in grid:
            for b in grid:
                lhs = p0_2d(b) @ p0_2d(a)
                assert np.abs(lhs - so3_from_axis_angle(compose_p0(b, a))[:2, :2]).max() <= 1e-14
                assert np.abs(p0_3d(b) @ p0_3d(a) - rotation_matrix(E3, 2 * (b - a))).max() <= 1e-14

    def test_non_commutative(self):
        grid = np.arange(16) * np.pi / 8
        for a in grid:
            for b in grid:
                k = 4 * (b - a) / (2 * np.pi)
                commute = abs(k - round(k)) < 1e-9
                ab, ba = compose_p0(b, a).angle, compose_p0(a, b).angle
                d = abs(ab - ba) % (2 * np.pi)
                same = min(d, 2 * np.pi - d) < 1e-12
                assert same == commute


class TestFactorSO2:
    def test_quarter_turn(self):
        P2, P1 = factor_so2(np.pi / 2, 0.0)
        assert_array_equal(P2, p0_2d(np.pi / 4))
        assert_array_equal(P1, p0_2d(0.0))
        assert_allclose(P2 @ P1, rot2(np.pi / 2), atol=1e-15)

    def test_identity(self):
        P2, P1 = factor_so2(0.0, 0.9)
        assert_array_equal(P2, P1)
        assert_allclose(P2 @ P1, np.eye(2), atol=1e-15)

    def test_gauge_independence(self, rng):
        for alpha in rng.uniform(0, 2 * np.pi, size=50):
            A = np.matmul(*factor_so2(alpha, 0.0))
            B = np.matmul(*factor_so2(alpha, 1.1))
            assert np.abs(A - B).max() <= 1e-14
            assert np.abs(A - rot2(alpha)).max() <= 1e-14


class TestBinaryIdentification:
    def test_at_zero(self):
        a = p0_as_binary(0.0)
        assert_allclose(a.axis, [0, -1, 0])
        assert a.angle == np.pi
        assert_allclose(-p0_3d(0.0), np.diag([-1.0, 1.0, -1.0]))
        assert_allclose(-p0_3d(0.0), binary_rotation(E2), atol=1e-16)

    def test_at_half_pi(self):
        a = p0_as_binary(np.pi / 2)
        assert_allclose(a.axis, E1, atol=1e-16)
        assert_allclose(-p0_3d(np.pi / 2), binary_rotation(E1), atol=1e-15)

    def test_both_signs(self, rng):
        for alpha in rng.uniform(-10, 10, size=200):
            a = p0_as_binary(alpha)
            assert np.abs(-p0_3d(alpha) - binary_rotation(a.axis)).max() <= 1e-14
            assert np.abs(-p0_3d(alpha) - binary_rotation(-a.axis)).max() <= 1e-14


class TestPlaneReflection:
    def test_xz_plane(self):
        assert_allclose(plane_reflection(E3, E1), np.diag([1.0, -1.0, 1.0]))

    def test_fixes_its_plane(self, rng):
        for _ in range(200):
            n, n1 = random_orthogonal_pair(rng)
            P = plane_reflection(n, n1)
            check_reflection(P)
            assert np.abs(P @ n - n).max() <= 1e-14
            assert np.abs(P @ n1 - n1).max() <= 1e-14

    def test_is_negative_binary(self, rng):
        for _ in range(1000):
            n, n1 = random_orthogonal_pair(rng)
            m = cross(n, n1)
            m /= np.linalg.norm(m)
            assert np.abs(plane_reflection(n, n1) + binary_rotation(m)).max() <= 1e-14

    def test_rejects_non_orthogonal(self):
        with pytest.raises(InvalidInput):
            plane_reflection(E3, [R2, 0.0, R2])


class TestFactorSO3:
    def test_quarter_turn_about_z(self):
        n1, n2 = factor_so3(AxisAngle(E3, np.pi / 2))
        assert_allclose(n1, E1)
        assert_allclose(n2, [R2, R2, 0], atol=1e-16)

    def test_half_turn_about_z(self):
        n1, n2 = factor_so3(AxisAngle(E3, np.pi))
        assert_allclose(n1, E1)
        assert_allclose(n2, E2, atol=1e-16)
        # diag(-1,1,-1) @ diag(1,-1,-1) = diag(-1,-1,1)
        assert_allclose(binary_rotation(n2) @ binary_rotation(n1), np.diag([-1.0, -1.0, 1.0]),
                        atol=1e-15)

    def test_identity_degenerates(self):
        n1, n2 = factor_so3(AxisAngle(SENTINEL_AXIS, 0.0))
        assert_array_equal(n1, n2)
        assert_array_equal(n1, gauge_vector(SENTINEL_AXIS))

    def test_postconditions(self, rng):
        for _ in range(1000):
            a = random_axis_angle(rng)
            n1, n2 = factor_so3(a, rng.uniform(0, 2 * np.pi))
            R = so3_from_axis_angle(a)
            assert abs(n1 @ a.axis) <= 1e-12
            assert abs(n1 @ n2 - np.cos(a.angle / 2)) <= 1e-12
            assert np.abs(cross(n1, n2) - a.axis * np.sin(a.angle / 2)).max() <= 1e-12
            assert np.abs(binary_rotation(n2) @ binary_rotation(n1) - R).max() <= 1e-12
            refl = plane_reflection(a.axis, n2) @ plane_reflection(a.axis, n1)
            assert np.abs(refl - R).max() <= 1e-12

    def test_gauge_independence(self, rng):
        for _ in range(200):
            a = random_axis_angle(rng)
            p = [np.matmul(*map(binary_rotation, factor_so3(a, g)[::-1]))
                 for g in rng.uniform(0, 2 * np.pi, size=2)]
            assert np.abs(p[0] - p[1]).max() <= 1e-12

    def test_gauge_vector_rule(self, rng):
        assert_array_equal(gauge_vector(E3), E1)
        assert_array_equal(gauge_vector(E1), E2)
        for _ in range(100):
            n = random_unit(rng)
            u = gauge_vector(n, rng.uniform(-5, 5))
            assert abs(u @ n) <= 1e-15
            assert abs(u @ u - 1) <= 1e-15

    def test_rejects_su2(self):
        with pytest.raises(InvalidInput):
            factor_so3(AxisAngle(E3, 4.0, Group.SU2))
