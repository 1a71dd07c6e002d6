# pylint:disable=missing-module-docstring
from sumloci.enum.strenum import StrEnum


class DegeneracyKind(StrEnum):
    """
    Reason why a squared-distance locus is not an ellipse although it is not empty.
    """

    PARALLEL_PENCIL = "PARALLEL_PENCIL"
    """all lines are parallel, the quadratic part has rank one and the locus is one line or a pair of lines"""
    OTHER = "OTHER"
    """the quadratic part is numerically singular although the lines are not parallel"""
