"""
Contains Segment class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class Segment(COM):
    """
    A chord of a polygon. The endpoints lie on the boundary and are ordered lexicographically by (x, y).
    """

    typ: Annotated[Literal[Typ.SEGMENT], Field(alias="_typ")] = Typ.SEGMENT

    start: Point
    end: Point

    @property
    def length(self) -> float:
        """distance between the endpoints"""
        return self.start.distance_to(self.end)
