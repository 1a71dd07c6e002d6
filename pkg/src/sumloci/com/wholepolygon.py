"""
Contains WholePolygon class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM

# pylint: disable=too-few-public-methods


class WholePolygon(COM):
    """
    The distance sum function is constant and equal to the requested value, so every point of the polygon belongs
    to the locus.
    """

    typ: Annotated[Literal[Typ.WHOLE_POLYGON], Field(alias="_typ")] = Typ.WHOLE_POLYGON
