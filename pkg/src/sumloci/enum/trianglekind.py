# pylint:disable=missing-module-docstring
from sumloci.enum.strenum import StrEnum


class TriangleKind(StrEnum):
    """
    Classification of a triangle by its side lengths. An equilateral triangle is reported as EQUILATERAL only,
    never additionally as ISOSCELES.
    """

    EQUILATERAL = "EQUILATERAL"  #: all three sides equal
    ISOSCELES = "ISOSCELES"  #: exactly two sides equal
    SCALENE = "SCALENE"  #: no two sides equal
