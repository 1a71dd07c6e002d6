"""
Contains TriangleClass class
"""

from ..enum.trianglekind import TriangleKind
from .com import COM

# pylint: disable=too-few-public-methods


class TriangleClass(COM):
    """
    Result of classifying a triangle by its sides and angles.
    """

    kind: TriangleKind
    right_angled: bool
