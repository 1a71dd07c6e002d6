"""
Contains QuadraticForm class
"""

import math
from fractions import Fraction
from typing import Optional

from pydantic import FiniteFloat

from .._planar import FloatOrArray
from .com import COM

# pylint: disable=too-few-public-methods, invalid-name


class QuadraticForm(COM):
    """
    Q(x, y) = A·x² + B·x·y + C·y² + D·x + E·y + F0.

    Built from n normalized lines as the sum of the squared signed evaluations, the trace A + C equals n. The locus
    S_k is the level set Q = k.
    """

    A: FiniteFloat
    B: FiniteFloat
    C: FiniteFloat
    D: FiniteFloat
    E: FiniteFloat
    F0: FiniteFloat

    @property
    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        """(A, B, C, D, E, F0)"""
        return self.A, self.B, self.C, self.D, self.E, self.F0

    @property
    def trace(self) -> float:
        """A + C, the trace of the symmetric matrix [[A, B/2], [B/2, C]]"""
        return self.A + self.C

    def evaluate(self, x: FloatOrArray, y: FloatOrArray) -> FloatOrArray:
        """
        Q at a point, or elementwise at numpy coordinate arrays.
        """
        return self.A * x * x + self.B * x * y + self.C * y * y + self.D * x + self.E * y + self.F0

    def shifted(self, k: float) -> "QuadraticForm":
        """
        The form Q - k, whose zero set is the locus Q = k.
        """
        return self.model_copy(update={"F0": self.F0 - k})

    def integer_coefficients(self, max_denominator: int = 1000) -> Optional[tuple[int, ...]]:
        """
        The coefficients scaled by a positive factor to coprime integers, e.g. (34, 24, 41, -72, -96, 19) for
        (34x² + 24xy + 41y² - 72x - 96y + 19)/25. Returns None if some coefficient is not (close to) a fraction with
        denominator at most max_denominator.
        """
        scale = max(abs(value) for value in self.coefficients)
        if scale == 0.0:
            return None
        fractions = []
        for value in self.coefficients:
            fraction = Fraction(value / scale).limit_denominator(max_denominator)
            if abs(float(fraction) - value / scale) > 1e-9:
                return None
            fractions.append(fraction)
        common_denominator = math.lcm(*(fraction.denominator for fraction in fractions))
        integers = [int(fraction * common_denominator) for fraction in fractions]
        divisor = math.gcd(*integers)
        return tuple(integer // divisor for integer in integers)
