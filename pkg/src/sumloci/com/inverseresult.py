"""
Contains InverseResult class
"""

from pydantic import PositiveFloat

from ..bo.triangle import Triangle
from .com import COM
from .inverseparameters import InverseParameters
from .point import Point

# pylint: disable=too-few-public-methods


class InverseResult(COM):
    """
    A triangle and a constant k whose squared-distance locus S_k is a prescribed ellipse.

    For the canonical ellipse x²/α² + y²/β² = 1 the triangle is A'(0, a - l), B'(-b, -l), C'(b, -l) with the apex up.
    """

    triangle: Triangle
    k: PositiveFloat
    params: InverseParameters

    def reflected(self) -> "InverseResult":
        """
        The same construction mirrored across the major axis: the apex points down and S_k is the same ellipse.
        Only meaningful for the canonical (origin centered, axis aligned) construction.
        """
        mirrored = Triangle(
            v0=Point(x=self.triangle.v0.x, y=-self.triangle.v0.y),
            v1=Point(x=self.triangle.v1.x, y=-self.triangle.v1.y),
            v2=Point(x=self.triangle.v2.x, y=-self.triangle.v2.y),
        )
        return self.model_copy(update={"triangle": mirrored})
