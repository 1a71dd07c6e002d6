"""
Contains OrientedLine class
"""

import math

from pydantic import FiniteFloat, model_validator

from .._planar import FloatOrArray
from ..errors import DegenerateLine
from ..tolerances import DEFAULT_TOLERANCES
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class OrientedLine(COM):
    """
    The line a·x + b·y + c = 0 with (a, b) normalized to unit length.

    Because of the normalization a·x + b·y + c is the signed distance of (x, y) from the line; the sign tells the
    side. Lines built by :func:`sumloci.geometry.make_oriented_line` are oriented such that a designated point
    (e.g. the inside of a polygon) evaluates positive.
    """

    a: FiniteFloat
    b: FiniteFloat
    c: FiniteFloat

    @model_validator(mode="after")
    def _check_normalized(self) -> "OrientedLine":
        norm = self.a * self.a + self.b * self.b
        if abs(norm - 1.0) > DEFAULT_TOLERANCES.normalization:
            raise ValueError(f"(a, b) = ({self.a}, {self.b}) is not normalized, a²+b² = {norm}")
        return self

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "OrientedLine":
        """
        Normalizes an arbitrary (non-zero) coefficient triple; the orientation of (a, b, c) is kept.
        """
        norm = math.hypot(a, b)
        if norm == 0.0:
            raise DegenerateLine(f"({a}, {b}, {c}) does not describe a line, a and b both vanish")
        # adding 0.0 turns a negative zero into a positive one
        return cls(a=a / norm + 0.0, b=b / norm + 0.0, c=c / norm + 0.0)

    @property
    def normal(self) -> tuple[float, float]:
        """unit normal pointing into the positive side"""
        return self.a, self.b

    @property
    def direction(self) -> tuple[float, float]:
        """unit vector along the line, the normal turned clockwise"""
        return self.b, -self.a

    def evaluate(self, x: FloatOrArray, y: FloatOrArray) -> FloatOrArray:
        """
        a·x + b·y + c for scalars or numpy arrays.
        """
        return self.a * x + self.b * y + self.c

    def reversed(self) -> "OrientedLine":
        """
        The same point set with the opposite positive side.
        """
        return OrientedLine(a=-self.a + 0.0, b=-self.b + 0.0, c=-self.c + 0.0)

    def foot_of(self, point: Point) -> Point:
        """
        Orthogonal projection of a point onto the line.
        """
        distance = self.a * point.x + self.b * point.y + self.c
        return Point(x=point.x - distance * self.a, y=point.y - distance * self.b)
