"""
Contains RigidMotion class
"""

import math

from pydantic import FiniteFloat

from ..bo.triangle import Triangle
from .com import COM
from .orientedline import OrientedLine
from .point import Point

# pylint: disable=too-few-public-methods


class RigidMotion(COM):
    """
    A proper rigid motion of the plane: rotation by `rotation` radians about the origin, followed by a translation
    by (dx, dy). Distances, and therefore all distance sums, are invariant under it.
    """

    rotation: FiniteFloat = 0.0
    dx: FiniteFloat = 0.0
    dy: FiniteFloat = 0.0

    def apply_point(self, point: Point) -> Point:
        """
        Image of a point.
        """
        cos_r, sin_r = math.cos(self.rotation), math.sin(self.rotation)
        return Point(
            x=cos_r * point.x - sin_r * point.y + self.dx,
            y=sin_r * point.x + cos_r * point.y + self.dy,
        )

    def apply_line(self, line: OrientedLine) -> OrientedLine:
        """
        Image of an oriented line; images of points keep their signed distance.
        """
        cos_r, sin_r = math.cos(self.rotation), math.sin(self.rotation)
        a = cos_r * line.a - sin_r * line.b
        b = sin_r * line.a + cos_r * line.b
        return OrientedLine.from_coefficients(a, b, line.c - a * self.dx - b * self.dy)

    def apply_triangle(self, triangle: Triangle) -> Triangle:
        """
        Image of a triangle. Proper motions keep the orientation, so the vertex order is kept as well.
        """
        return Triangle(
            v0=self.apply_point(triangle.v0),
            v1=self.apply_point(triangle.v1),
            v2=self.apply_point(triangle.v2),
        )
