"""
The distance sum function V of a convex polygon and its level sets T_k.

Inside the polygon V is linear, so every level set is the intersection of a line with the polygon, and V attains its
extremes at corners (a linear program over the polygon). V is constant, and T_k either everything or nothing, exactly
when the inward unit normals of the sides cancel, e.g. for an equilateral triangle or a rectangle.
"""

import logging

import numpy as np

from ._planar import cross
from .com.direction import Direction
from .com.empty import Empty
from .com.isotropicconstant import IsotropicConstant
from .com.krange import KRange
from .com.linearform import LinearForm
from .com.orientedline import OrientedLine
from .com.point import Point
from .com.pointhit import PointHit
from .com.variants import LevelDirection, SumLocus
from .com.vertex import Vertex
from .com.wholepolygon import WholePolygon
from .errors import CollinearProbe, OutsideDomain
from .geometry import Polygonal, as_polygon, clip_line_to_polygon, point_in_polygon, sides_of
from .tolerances import DEFAULT_TOLERANCES

_logger = logging.getLogger(__name__)


def distance_sum_form(poly: Polygonal) -> LinearForm:
    """
    V(x, y) = A·x + B·y + C as the sum of the inward side lines. For the triangle (0, 0), (0, 3), (4, 0) this is
    V = 0.4·x + 0.2·y + 2.4.
    """
    sides = sides_of(poly)
    return LinearForm(
        A=sum(side.a for side in sides) + 0.0,
        B=sum(side.b for side in sides) + 0.0,
        C=sum(side.c for side in sides) + 0.0,
    )


def _is_constant(form: LinearForm, side_count: int) -> bool:
    # the gradient is a sum of side_count unit vectors
    return form.gradient_norm <= DEFAULT_TOLERANCES.classification * side_count


def sum_locus(poly: Polygonal, k: float) -> SumLocus:
    """
    T_k: the points of the closed polygon whose distance sum equals k.

    A segment between two boundary points for k strictly between the extremal values, a single corner at the
    extremal values, empty outside; for constant V the whole polygon if k is that constant, else empty.
    """
    polygon = as_polygon(poly)
    form = distance_sum_form(polygon)
    if _is_constant(form, len(polygon.vertices)):
        if abs(k - form.C) <= DEFAULT_TOLERANCES.geometry * form.C:
            return WholePolygon()
        return Empty()
    level_line = OrientedLine.from_coefficients(form.A, form.B, form.C - k)
    clipped = clip_line_to_polygon(level_line, polygon)
    _logger.debug("T_%s is %s", k, clipped.typ)
    if isinstance(clipped, PointHit):
        return Vertex(point=clipped.point)
    return clipped


def k_range(poly: Polygonal) -> KRange:
    """
    Minimum and maximum of V over the polygon, attained at corners. For a triangle these are the smallest and the
    largest altitude.
    """
    polygon = as_polygon(poly)
    form = distance_sum_form(polygon)
    values = [form.evaluate(vertex.x, vertex.y) for vertex in polygon.vertices]
    return KRange(k_min=float(min(values)), k_max=float(max(values)))


def level_direction(poly: Polygonal) -> LevelDirection:
    """
    Unit vector along the level lines of V, perpendicular to its gradient (A, B); IsotropicConstant if there is no
    gradient.
    """
    polygon = as_polygon(poly)
    form = distance_sum_form(polygon)
    if _is_constant(form, len(polygon.vertices)):
        return IsotropicConstant()
    x = -form.B / form.gradient_norm
    y = form.A / form.gradient_norm
    tiny = DEFAULT_TOLERANCES.classification
    if x < -tiny or (abs(x) <= tiny and y < 0):
        x, y = -x, -y
    return Direction(x=x + 0.0, y=y + 0.0)


def is_viviani(poly: Polygonal) -> bool:
    """
    Whether V is constant on the polygon. Among triangles exactly the equilateral ones have this property.
    """
    polygon = as_polygon(poly)
    return _is_constant(distance_sum_form(polygon), len(polygon.vertices))


def three_point_test(poly: Polygonal, p1: Point, p2: Point, p3: Point) -> bool:
    """
    Whether V takes the same value at three non-collinear points of the polygon. If it does, V is constant on the
    whole polygon.

    Raises CollinearProbe if the points are collinear and OutsideDomain if one of them lies outside the polygon.
    """
    polygon = as_polygon(poly)
    for probe in (p1, p2, p3):
        if not point_in_polygon(polygon, probe):
            raise OutsideDomain(f"probe {probe.coordinates} lies outside the polygon {polygon.coordinates}")
    if abs(cross(p1.coordinates, p2.coordinates, p3.coordinates)) <= polygon.area_tolerance:
        raise CollinearProbe(f"probes {p1.coordinates}, {p2.coordinates}, {p3.coordinates} are collinear")
    form = distance_sum_form(polygon)
    values = [float(form.evaluate(probe.x, probe.y)) for probe in (p1, p2, p3)]
    return max(values) - min(values) <= DEFAULT_TOLERANCES.classification * max(abs(value) for value in values)


def level_segments(poly: Polygonal, count: int) -> list[tuple[float, SumLocus]]:
    """
    The division of the polygon into parallel level loci: `count` evenly spaced values of k from the smallest to the
    largest value of V (both included) with their loci.
    """
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    polygon = as_polygon(poly)
    attainable = k_range(polygon)
    return [
        (float(k), sum_locus(polygon, float(k)))
        for k in np.linspace(attainable.k_min, attainable.k_max, count)
    ]
