"""
Contains Point class
"""

import math

import numpy as np
import numpy.typing as npt
from pydantic import FiniteFloat

from .com import COM

# pylint: disable=too-few-public-methods


class Point(COM):
    """
    A point of the plane. Coordinates are finite numbers in length units.
    """

    x: FiniteFloat
    y: FiniteFloat

    @classmethod
    def of(cls, x: float, y: float) -> "Point":
        """
        Positional shorthand for Point(x=..., y=...).
        """
        return cls(x=x, y=y)

    @property
    def coordinates(self) -> tuple[float, float]:
        """the point as plain (x, y) tuple"""
        return self.x, self.y

    def as_array(self) -> npt.NDArray[np.float64]:
        """
        the point as numpy vector of shape (2,)
        """
        return np.array([self.x, self.y], dtype=np.float64)

    def distance_to(self, other: "Point") -> float:
        """
        Euclidean distance to another point.
        """
        return math.hypot(self.x - other.x, self.y - other.y)
