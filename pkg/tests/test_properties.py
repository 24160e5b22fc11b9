"""Property-based checks of the group structure shared by every representation."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from hamilton_turns import (
    Group, SU2Element, phi, slide, su2_element, turn_compose, turn_element,
    turn_from_axis_angle,
)
from hamilton_turns.base import AxisAngle

finite = st.floats(-1.0, 1.0, allow_nan=False)
vec = st.tuples(finite, finite, finite).filter(lambda v: np.dot(v, v) > 1e-4)
unit = vec.map(lambda v: np.asarray(v) / np.linalg.norm(v))
angle = st.floats(0.0, 2 * np.pi, allow_nan=False)
element = st.builds(su2_element, unit, angle)
turn = st.builds(lambda n, a, g: turn_from_axis_angle(AxisAngle(n, a, Group.SU2), g),
                 unit, angle, st.floats(0.0, 2 * np.pi))


def q(U):
    return np.asarray(U.quaternion)


@settings(max_examples=200, deadline=None)
@given(element, element, element)
def test_su2_associative(a, b, c):
    assert np.abs(q((a @ b) @ c) - q(a @ (b @ c))).max() <= 1e-14


@given(element)
def test_su2_identity_and_inverse(a):
    e = SU2Element.identity()
    assert np.abs(q(a @ e) - q(a)).max() == 0.0
    inv = SU2Element(a.w, -a.v)
    assert np.abs(q(a @ inv) - [1, 0, 0, 0]).max() <= 1e-15


@settings(max_examples=200, deadline=None)
@given(element, element)
def test_phi_homomorphism(a, b):
    assert np.abs(phi(a @ b) - phi(a) @ phi(b)).max() <= 1e-13


@settings(max_examples=200, deadline=None)
@given(turn, turn, turn)
def test_turn_composition_associative(a, b, c):
    left = turn_element(turn_compose(turn_compose(a, b), c))
    right = turn_element(turn_compose(a, turn_compose(b, c)))
    assert np.abs(q(left) - q(right)).max() <= 1e-9


@settings(max_examples=200, deadline=None)
@given(turn, st.floats(-20.0, 20.0))
def test_slide_preserves_element(t, theta):
    assert np.abs(q(turn_element(slide(t, theta))) - q(turn_element(t))).max() <= 1e-12
