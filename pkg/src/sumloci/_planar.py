"""
Scalar helpers on coordinate pairs shared by the shape validators and the geometry operations.
"""

import math
from typing import Sequence, Union

import numpy as np
import numpy.typing as npt

Coordinates = tuple[float, float]
FloatOrArray = Union[float, npt.NDArray[np.float64]]
"""a scalar or a numpy array of coordinates, as accepted by the vectorized evaluate methods"""


def cross(origin: Coordinates, first: Coordinates, second: Coordinates) -> float:
    """
    z-component of (first - origin) x (second - origin); positive iff origin, first, second turn counterclockwise.
    """
    return (first[0] - origin[0]) * (second[1] - origin[1]) - (first[1] - origin[1]) * (second[0] - origin[0])


def twice_signed_area(vertices: Sequence[Coordinates]) -> float:
    """
    Shoelace formula, positive for counterclockwise vertex order.
    """
    total = 0.0
    for index, (x_0, y_0) in enumerate(vertices):
        x_1, y_1 = vertices[(index + 1) % len(vertices)]
        total += x_0 * y_1 - x_1 * y_0
    return total


def bounding_box_diagonal(vertices: Sequence[Coordinates]) -> float:
    """
    Length of the diagonal of the axis-parallel bounding box.
    """
    xs = [vertex[0] for vertex in vertices]
    ys = [vertex[1] for vertex in vertices]
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def area_centroid(vertices: Sequence[Coordinates]) -> Coordinates:
    """
    Centroid of the area enclosed by a simple polygon with non-zero area.
    """
    area2 = twice_signed_area(vertices)
    c_x = 0.0
    c_y = 0.0
    for index, (x_0, y_0) in enumerate(vertices):
        x_1, y_1 = vertices[(index + 1) % len(vertices)]
        weight = x_0 * y_1 - x_1 * y_0
        c_x += (x_0 + x_1) * weight
        c_y += (y_0 + y_1) * weight
    return c_x / (3.0 * area2), c_y / (3.0 * area2)
