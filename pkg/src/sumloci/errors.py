"""
Contains the exceptions raised by sumloci.

None of them derives from ValueError: raised inside a pydantic validator they propagate unchanged instead of being
wrapped into a ValidationError.
"""


class GeometryError(Exception):
    """
    Base class of all domain errors.
    """


class DegenerateLine(GeometryError):
    """
    The two points that should define a line coincide.
    """


class AmbiguousOrientation(GeometryError):
    """
    The point that should mark the positive side of a line lies on the line.
    """


class DegenerateShape(GeometryError):
    """
    A triangle or polygon has (almost) zero area, too few vertices or repeated vertices.
    """


class NotConvex(GeometryError):
    """
    The vertices of a polygon do not describe a strictly convex polygon.
    """


class CollinearProbe(GeometryError):
    """
    Three probe points that must span a triangle are collinear.
    """


class OutsideDomain(GeometryError):
    """
    A probe point lies outside the polygon it should probe.
    """


class EmptyLineSet(GeometryError):
    """
    A sum over lines was requested for an empty set of lines.
    """


class NotAnEllipse(GeometryError):
    """
    Ellipse geometry was requested for a locus that is not a non-degenerate ellipse.
    """


class InvalidAxes(GeometryError):
    """
    Semi-axes of a canonical ellipse violate alpha >= beta > 0.
    """


class SceneError(GeometryError):
    """
    A scene given on the command line or in a scene file cannot be parsed.
    """
