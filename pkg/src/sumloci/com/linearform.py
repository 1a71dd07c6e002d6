"""
Contains LinearForm class
"""

import math

from pydantic import FiniteFloat

from .._planar import FloatOrArray
from .com import COM

# pylint: disable=too-few-public-methods, invalid-name


class LinearForm(COM):
    """
    The distance sum function V(x, y) = A·x + B·y + C of a convex polygon.

    Inside the polygon every side line evaluates non-negative, so the sum of the signed evaluations is the sum of the
    distances and V is linear there. (A, B) is the sum of the inward unit normals, C the sum of the line offsets.
    """

    A: FiniteFloat
    B: FiniteFloat
    C: FiniteFloat

    @property
    def gradient(self) -> tuple[float, float]:
        """(A, B), constant over the whole polygon"""
        return self.A, self.B

    @property
    def gradient_norm(self) -> float:
        """length of (A, B)"""
        return math.hypot(self.A, self.B)

    def evaluate(self, x: FloatOrArray, y: FloatOrArray) -> FloatOrArray:
        """
        V at a point, or elementwise at numpy coordinate arrays.
        """
        return self.A * x + self.B * y + self.C
