"""
Contains PointHit class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class PointHit(COM):
    """
    A line touches a polygon in a single point (a vertex, or a chord shorter than the geometry tolerance).
    """

    typ: Annotated[Literal[Typ.POINT_HIT], Field(alias="_typ")] = Typ.POINT_HIT

    point: Point
