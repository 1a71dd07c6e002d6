"""
Contains Vertex class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class Vertex(COM):
    """
    A level locus that shrank to a single point of the polygon boundary, typically a corner at an extremal value.
    """

    typ: Annotated[Literal[Typ.VERTEX], Field(alias="_typ")] = Typ.VERTEX

    point: Point
