"""
Contains Direction class
"""

from typing import Annotated, Literal

from pydantic import Field, FiniteFloat

from ..enum.typ import Typ
from .com import COM

# pylint: disable=too-few-public-methods


class Direction(COM):
    """
    Unit vector parallel to the level lines of the distance sum function. The sign is fixed such that x > 0, or
    y > 0 if x vanishes.
    """

    typ: Annotated[Literal[Typ.DIRECTION], Field(alias="_typ")] = Typ.DIRECTION

    x: FiniteFloat
    y: FiniteFloat
