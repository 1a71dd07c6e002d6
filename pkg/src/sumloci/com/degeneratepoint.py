"""
Contains DegeneratePoint class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class DegeneratePoint(COM):
    """
    The squared-distance locus at k = k_min: the ellipse has shrunk to the minimizer.
    """

    typ: Annotated[Literal[Typ.DEGENERATE_POINT], Field(alias="_typ")] = Typ.DEGENERATE_POINT

    point: Point
