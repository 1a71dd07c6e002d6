"""
Contains KRange class
"""

from pydantic import FiniteFloat

from .com import COM

# pylint: disable=too-few-public-methods


class KRange(COM):
    """
    Smallest and largest value of the distance sum function over a polygon. Every k in between is attained.
    """

    k_min: FiniteFloat
    k_max: FiniteFloat

    def contains(self, k: float, tolerance: float = 0.0) -> bool:
        """
        Whether k lies in [k_min, k_max], widened by `tolerance` on both ends.
        """
        return self.k_min - tolerance <= k <= self.k_max + tolerance
