"""
Contains IsotropicConstant class
"""

from typing import Annotated, Literal

from pydantic import Field

from ..enum.typ import Typ
from .com import COM

# pylint: disable=too-few-public-methods


class IsotropicConstant(COM):
    """
    The distance sum function has no gradient: it is constant on the polygon and no level direction exists.
    """

    typ: Annotated[Literal[Typ.ISOTROPIC_CONSTANT], Field(alias="_typ")] = Typ.ISOTROPIC_CONSTANT
