"""
Contains DegenerateNonElliptic class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.degeneracykind import DegeneracyKind
from ..enum.typ import Typ
from .com import COM
from .orientedline import OrientedLine

# pylint: disable=too-few-public-methods


class DegenerateNonElliptic(COM):
    """
    A non-empty squared-distance locus that is not an ellipse. For a parallel pencil it consists of the line of
    minima (k = k_min) or of two lines parallel to it (k > k_min).
    """

    typ: Annotated[Literal[Typ.DEGENERATE_NON_ELLIPTIC], Field(alias="_typ")] = Typ.DEGENERATE_NON_ELLIPTIC

    kind: DegeneracyKind
    lines: list[OrientedLine]
