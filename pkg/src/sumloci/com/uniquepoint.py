"""
Contains UniquePoint class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class UniquePoint(COM):
    """
    The sum of squared distances attains its minimum in exactly one point.
    """

    typ: Annotated[Literal[Typ.UNIQUE_POINT], Field(alias="_typ")] = Typ.UNIQUE_POINT

    point: Point
