"""
Contains Ellipse class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM
from .ellipsegeometry import EllipseGeometry

# pylint: disable=too-few-public-methods


class Ellipse(COM):
    """
    A non-degenerate elliptic squared-distance locus.
    """

    typ: Annotated[Literal[Typ.ELLIPSE], Field(alias="_typ")] = Typ.ELLIPSE

    geometry: EllipseGeometry
