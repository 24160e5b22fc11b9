"""SO(3) and SU(2) rotation algebra expressed through turns, the directed great-circle arcs.

A rotation R(n; a) factors as a product of two binary rotations (rotations
by pi) about unit vectors n1, n2 orthogonal to n and a/2 apart.  The arc
n1 -> n2 on the unit sphere is the rotation's *turn*; composing rotations
is composing arcs tail to head.
"""
from .base import (
    DEFAULT_TOL, E1, E2, E3, SENTINEL_AXIS, AxisAngle, Group, InvalidInput,
    SameCircleError, Tolerances, unit_vector,
)
from .reflections import (
    apply_p0, compose_p0, factor_so2, factor_so3, gauge_vector, p0_2d, p0_3d,
    p0_as_binary, plane_reflection,
)
from .so3 import (
    binary_rotation, check_rotation, rodrigues_compose, rotation_matrix,
    so3_canonicalize, so3_compose, so3_from_axis_angle, so3_to_axis_angle,
)
from .su2 import (
    SU2Element, lift, pauli_product, phi, su2_canonicalize, su2_compose,
    su2_element, su2_from_axis_angle, su2_to_axis_angle,
)
from .turns import (
    Turn, arc_points, binary_pair_su2, great_circle_intersection,
    normalize_turn_so3, slide, turn_compose, turn_element, turn_equivalent,
    turn_from_axis_angle, turn_to_group,
)

__version__ = "0.1.0"
