"""
Contains SquaredMinimum class
"""

from typing import Union

from pydantic import NonNegativeFloat

from .com import COM
from .lineofminima import LineOfMinima
from .uniquepoint import UniquePoint

# pylint: disable=too-few-public-methods


class SquaredMinimum(COM):
    """
    The minimal sum of squared distances to a set of lines and where it is attained.
    """

    k_min: NonNegativeFloat
    argmin: Union[UniquePoint, LineOfMinima]
