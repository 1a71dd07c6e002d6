"""
Contains LineOfMinima class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .orientedline import OrientedLine

# pylint: disable=too-few-public-methods


class LineOfMinima(COM):
    """
    All lines are parallel; the sum of squared distances attains its minimum on every point of a line.
    """

    typ: Annotated[Literal[Typ.LINE_OF_MINIMA], Field(alias="_typ")] = Typ.LINE_OF_MINIMA

    line: OrientedLine
