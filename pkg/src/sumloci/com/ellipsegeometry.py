"""
Contains EllipseGeometry class
"""

import math

import numpy as np
import numpy.typing as npt
from pydantic import FiniteFloat, PositiveFloat, model_validator

from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class EllipseGeometry(COM):
    """
    Canonical data of an ellipse: the ellipse is x'²/α² + y'²/β² = 1 in the frame that is centered at `center` and
    whose x'-axis makes the angle `rotation` with the x-axis.
    """

    center: Point
    semi_major: PositiveFloat
    """α, half the length of the major axis"""
    semi_minor: PositiveFloat
    """β, half the length of the minor axis; α ≥ β"""
    rotation: FiniteFloat
    """angle of the major axis from the x-axis in radians, in [0, π); 0 for circles"""

    @model_validator(mode="after")
    def _check_axes(self) -> "EllipseGeometry":
        if self.semi_major < self.semi_minor:
            raise ValueError(f"semi_major {self.semi_major} must not be smaller than semi_minor {self.semi_minor}")
        if not 0.0 <= self.rotation < math.pi:
            raise ValueError(f"rotation {self.rotation} is not in [0, π)")
        return self

    @property
    def is_circle(self) -> bool:
        """both semi-axes are equal"""
        return self.semi_major == self.semi_minor

    def points(self, count: int) -> npt.NDArray[np.float64]:
        """
        `count` points of the ellipse, evenly spaced in the parameter angle, as array of shape (count, 2).
        """
        angles = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
        cos_r, sin_r = math.cos(self.rotation), math.sin(self.rotation)
        along = self.semi_major * np.cos(angles)
        across = self.semi_minor * np.sin(angles)
        xs = self.center.x + cos_r * along - sin_r * across
        ys = self.center.y + sin_r * along + cos_r * across
        return np.column_stack((xs, ys))
