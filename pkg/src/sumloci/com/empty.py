"""
Contains Empty class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM

# pylint: disable=too-few-public-methods


class Empty(COM):
    """
    The empty set: the line misses the polygon, or no point attains the requested value.
    """

    typ: Annotated[Literal[Typ.EMPTY], Field(alias="_typ")] = Typ.EMPTY
