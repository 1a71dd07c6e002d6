# pylint:disable=missing-module-docstring
from sumloci.enum.strenum import StrEnum


class Typ(StrEnum):
    """
    Discriminator of the result variants. Every variant component carries its value in the `_typ` field so that a
    serialized result can be told apart without knowing which operation produced it.
    """

    EMPTY = "EMPTY"
    POINT_HIT = "POINT_HIT"
    VERTEX = "VERTEX"
    SEGMENT = "SEGMENT"
    WHOLE_POLYGON = "WHOLE_POLYGON"
    DIRECTION = "DIRECTION"
    ISOTROPIC_CONSTANT = "ISOTROPIC_CONSTANT"
    UNIQUE_POINT = "UNIQUE_POINT"
    LINE_OF_MINIMA = "LINE_OF_MINIMA"
    DEGENERATE_POINT = "DEGENERATE_POINT"
    ELLIPSE = "ELLIPSE"
    DEGENERATE_NON_ELLIPTIC = "DEGENERATE_NON_ELLIPTIC"
