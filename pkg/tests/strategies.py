"""
hypothesis strategies for random shapes and parameters.

Every strategy draws a seed and builds its values with a numpy generator, so a failing example is reproduced from a
single integer.
"""

import math

import numpy as np
import numpy.typing as npt
from hypothesis import strategies as st

from sumloci import ConvexPolygon, Point, RigidMotion, Triangle

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _smallest_angle(coordinates: npt.NDArray[np.float64]) -> float:
    angles = []
    for index in range(3):
        corner = coordinates[index]
        first = coordinates[(index + 1) % 3] - corner
        second = coordinates[(index + 2) % 3] - corner
        cosine = float(np.dot(first, second) / (np.linalg.norm(first) * np.linalg.norm(second)))
        angles.append(math.acos(max(-1.0, min(1.0, cosine))))
    return min(angles)


@st.composite
def triangles(draw: st.DrawFn, scale: float = 10.0, min_angle_degrees: float = 5.0) -> Triangle:
    """
    Triangles with vertices in [-scale, scale]² and no angle below min_angle_degrees.
    """
    rng = np.random.default_rng(draw(seeds))
    while True:
        coordinates = rng.uniform(-scale, scale, size=(3, 2))
        if _smallest_angle(coordinates) >= math.radians(min_angle_degrees):
            return Triangle.from_coordinates(coordinates.tolist())


@st.composite
def equilateral_triangles(draw: st.DrawFn) -> Triangle:
    """
    Equilateral triangles with random center, size and rotation.
    """
    rng = np.random.default_rng(draw(seeds))
    c_x, c_y = rng.uniform(-10.0, 10.0, size=2)
    radius = rng.uniform(0.1, 10.0)
    phase = rng.uniform(0.0, 2.0 * math.pi)
    return Triangle.from_coordinates(
        [
            (
                c_x + radius * math.cos(phase + 2.0 * math.pi * index / 3),
                c_y + radius * math.sin(phase + 2.0 * math.pi * index / 3),
            )
            for index in range(3)
        ]
    )


@st.composite
def rigid_motions(draw: st.DrawFn) -> RigidMotion:
    """
    Rotations about the origin followed by translations of up to 10 in each direction.
    """
    rng = np.random.default_rng(draw(seeds))
    d_x, d_y = rng.uniform(-10.0, 10.0, size=2)
    return RigidMotion(rotation=rng.uniform(0.0, 2.0 * math.pi), dx=d_x, dy=d_y)


@st.composite
def isosceles_parameters(draw: st.DrawFn) -> tuple[float, float]:
    """
    (a, b) in [0.1, 10]² for the triangle A(0, a), B(-b, 0), C(b, 0).
    """
    rng = np.random.default_rng(draw(seeds))
    a, b = rng.uniform(0.1, 10.0, size=2)
    return float(a), float(b)


@st.composite
def axis_parameters(draw: st.DrawFn) -> tuple[float, float, float]:
    """
    (a, b, c) in [0.1, 10]³ for the triangle A(0, a), B(-b, 0), C(c, 0).
    """
    rng = np.random.default_rng(draw(seeds))
    a, b, c = rng.uniform(0.1, 10.0, size=3)
    return float(a), float(b), float(c)


@st.composite
def ellipse_axes(draw: st.DrawFn) -> tuple[float, float]:
    """
    Semi-axes alpha >= beta > 0 with alpha in [0.1, 10] and an axis ratio of at most 20.
    """
    rng = np.random.default_rng(draw(seeds))
    alpha = float(rng.uniform(0.1, 10.0))
    beta = alpha * float(rng.uniform(0.05, 1.0))
    return alpha, beta


def interior_points(triangle: Triangle, count: int, rng: np.random.Generator) -> list[Point]:
    """
    Points strictly inside the triangle, drawn with uniform barycentric weights.
    """
    weights = rng.dirichlet((1.0, 1.0, 1.0), size=count)
    weights = 0.98 * weights + 0.02 / 3
    corners = np.array(triangle.coordinates)
    return [Point(x=float(x), y=float(y)) for x, y in weights @ corners]


@st.composite
def convex_polygons(draw: st.DrawFn, max_corners: int = 8) -> ConvexPolygon:
    """
    Convex polygons with 3 to max_corners corners on a random ellipse, neighbouring corners at least 0.2 rad apart
    as seen from the center.
    """
    rng = np.random.default_rng(draw(seeds))
    corners = draw(st.integers(min_value=3, max_value=max_corners))
    while True:
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=corners))
        gaps = np.diff(np.append(angles, angles[0] + 2.0 * math.pi))
        if np.min(gaps) >= 0.2 and np.max(gaps) < math.pi - 0.2:
            break
    semi_x, semi_y = rng.uniform(0.5, 10.0, size=2)
    tilt = rng.uniform(0.0, math.pi)
    c_x, c_y = rng.uniform(-10.0, 10.0, size=2)
    local_x, local_y = semi_x * np.cos(angles), semi_y * np.sin(angles)
    x = c_x + math.cos(tilt) * local_x - math.sin(tilt) * local_y
    y = c_y + math.sin(tilt) * local_x + math.cos(tilt) * local_y
    return ConvexPolygon.from_coordinates(np.column_stack([x, y]).tolist())


def polygon_interior_points(polygon: ConvexPolygon, count: int, rng: np.random.Generator) -> list[Point]:
    """
    Points strictly inside the polygon: random convex combinations of the corners, pulled slightly to the centroid.
    """
    corners = np.array(polygon.coordinates)
    weights = rng.dirichlet(np.ones(len(corners)), size=count)
    weights = 0.98 * weights + 0.02 / len(corners)
    return [Point(x=float(x), y=float(y)) for x, y in weights @ corners]
