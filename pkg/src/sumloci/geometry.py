"""
Planar primitives: oriented normalized lines, the side lines of a convex polygon, clipping a line against a polygon
and the classification of triangles.

All functions are pure; shapes and lines are immutable.
"""

import logging
from typing import Union

from ._planar import cross
from .bo.convexpolygon import ConvexPolygon
from .bo.triangle import Triangle
from .com.empty import Empty
from .com.orientedline import OrientedLine
from .com.point import Point
from .com.pointhit import PointHit
from .com.segment import Segment
from .com.triangleclass import TriangleClass
from .com.variants import ClipResult
from .enum.trianglekind import TriangleKind
from .errors import AmbiguousOrientation, DegenerateLine
from .tolerances import DEFAULT_TOLERANCES

_logger = logging.getLogger(__name__)

Polygonal = Union[ConvexPolygon, Triangle]
"""anything with a convex outline; triangles are converted with Triangle.as_polygon()"""


def as_polygon(shape: Polygonal) -> ConvexPolygon:
    """
    The convex polygon behind a triangle or polygon.
    """
    if isinstance(shape, Triangle):
        return shape.as_polygon()
    return shape


def make_oriented_line(p: Point, q: Point, positive_side_hint: Point) -> OrientedLine:
    """
    The normalized line through p and q, oriented such that `positive_side_hint` evaluates positive.

    Raises DegenerateLine if p and q coincide and AmbiguousOrientation if the hint lies on the line.
    """
    scale = max(1.0, abs(p.x), abs(p.y), abs(q.x), abs(q.y))
    length = p.distance_to(q)
    if length <= DEFAULT_TOLERANCES.normalization * scale:
        raise DegenerateLine(f"points {p.coordinates} and {q.coordinates} do not define a line")
    a = -(q.y - p.y) / length
    b = (q.x - p.x) / length
    c = -(a * p.x + b * p.y)
    at_hint = a * positive_side_hint.x + b * positive_side_hint.y + c
    hint_scale = max(scale, abs(positive_side_hint.x), abs(positive_side_hint.y))
    if abs(at_hint) <= DEFAULT_TOLERANCES.normalization * hint_scale:
        raise AmbiguousOrientation(
            f"hint {positive_side_hint.coordinates} lies on the line through {p.coordinates} and {q.coordinates}"
        )
    if at_hint < 0:
        a, b, c = -a, -b, -c
    # adding 0.0 turns a negative zero into a positive one
    return OrientedLine(a=a + 0.0, b=b + 0.0, c=c + 0.0)


def line_through(p: Point, q: Point) -> OrientedLine:
    """
    The normalized line through p and q whose positive side is to the left of the direction p -> q.
    Used for free line sets, where only the point set of the line matters.
    """
    return make_oriented_line(p, q, Point(x=p.x - (q.y - p.y), y=p.y + (q.x - p.x)))


def signed_eval(line: OrientedLine, p: Point) -> float:
    """
    a·x + b·y + c at p: the distance of p from the line, signed by the side.
    """
    return line.a * p.x + line.b * p.y + line.c


def sides_of(poly: Polygonal) -> list[OrientedLine]:
    """
    One line per edge, in edge order, each oriented to evaluate positive at the centroid.
    """
    polygon = as_polygon(poly)
    centroid = polygon.centroid
    return [make_oriented_line(start, end, centroid) for start, end in polygon.edges]


def point_in_polygon(poly: Polygonal, p: Point) -> bool:
    """
    Whether p belongs to the closed polygon, up to the geometry tolerance.
    """
    polygon = as_polygon(poly)
    return all(signed_eval(side, p) >= -polygon.length_tolerance for side in sides_of(polygon))


def clip_line_to_polygon(line: OrientedLine, poly: Polygonal) -> ClipResult:
    """
    Intersection of the zero set of `line` with the closed polygon.

    Vertices closer to the line than the length tolerance count as on the line. A chord not longer than the length
    tolerance is reported as a single PointHit. Segment endpoints are ordered lexicographically.
    """
    polygon = as_polygon(poly)
    tolerance = polygon.length_tolerance
    vertices = polygon.vertices
    values = [signed_eval(line, vertex) for vertex in vertices]
    hits: list[Point] = []
    for index, vertex in enumerate(vertices):
        following = (index + 1) % len(vertices)
        value, next_value = values[index], values[following]
        if abs(value) <= tolerance:
            hits.append(vertex)
        elif abs(next_value) > tolerance and (value < 0) != (next_value < 0):
            weight = value / (value - next_value)
            hits.append(
                Point(
                    x=vertex.x + weight * (vertices[following].x - vertex.x),
                    y=vertex.y + weight * (vertices[following].y - vertex.y),
                )
            )
    if not hits:
        return Empty()
    direction_x, direction_y = line.direction
    hits.sort(key=lambda hit: direction_x * hit.x + direction_y * hit.y)
    first, last = hits[0], hits[-1]
    _logger.debug("Line %s meets polygon in %d points", line, len(hits))
    if first.distance_to(last) <= tolerance:
        return PointHit(point=first)
    start, end = sorted((first, last), key=lambda hit: hit.coordinates)
    return Segment(start=start, end=end)


def side_lengths(t: Triangle) -> tuple[float, float, float]:
    """
    Lengths of the sides opposite to v0, v1 and v2.
    """
    return t.v1.distance_to(t.v2), t.v2.distance_to(t.v0), t.v0.distance_to(t.v1)


def triangle_area(t: Triangle) -> float:
    """
    Area of the triangle.
    """
    return 0.5 * cross(t.v0.coordinates, t.v1.coordinates, t.v2.coordinates)


def _same_length(first: float, second: float) -> bool:
    return abs(first - second) <= DEFAULT_TOLERANCES.classification * max(first, second)


def classify_triangle(t: Triangle) -> TriangleClass:
    """
    Equilateral, isosceles or scalene, plus whether one angle is right. Side lengths are compared relative to the
    longer one; an angle counts as right if the cosine of it vanishes within the classification tolerance.
    """
    sides = side_lengths(t)
    equal_pairs = sum(_same_length(sides[i], sides[j]) for i, j in ((0, 1), (1, 2), (2, 0)))
    if equal_pairs == 3:
        kind = TriangleKind.EQUILATERAL
    elif equal_pairs >= 1:
        kind = TriangleKind.ISOSCELES
    else:
        kind = TriangleKind.SCALENE
    right_angled = False
    vertices = t.vertex_list
    for index, corner in enumerate(vertices):
        first = vertices[(index + 1) % 3]
        second = vertices[(index + 2) % 3]
        dot = (first.x - corner.x) * (second.x - corner.x) + (first.y - corner.y) * (second.y - corner.y)
        if abs(dot) <= DEFAULT_TOLERANCES.classification * corner.distance_to(first) * corner.distance_to(second):
            right_angled = True
    return TriangleClass(kind=kind, right_angled=right_angled)


def altitudes(t: Triangle) -> tuple[float, float, float]:
    """
    Altitudes from v0, v1 and v2: twice the area over the opposite side.
    """
    double_area = 2.0 * triangle_area(t)
    opposite_0, opposite_1, opposite_2 = side_lengths(t)
    return double_area / opposite_0, double_area / opposite_1, double_area / opposite_2
