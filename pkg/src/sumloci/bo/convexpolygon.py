"""
Contains ConvexPolygon class
"""

import logging
import math
from typing import Any, Sequence

from pydantic import model_validator

from .._planar import bounding_box_diagonal, cross, twice_signed_area
from ..com.point import Point
from ..errors import DegenerateShape, NotConvex
from ..tolerances import DEFAULT_TOLERANCES
from .shape import Shape

_logger = logging.getLogger(__name__)

# pylint: disable=too-few-public-methods


class ConvexPolygon(Shape):
    """
    A strictly convex polygon with at least three vertices. Clockwise input is reversed; repeated vertices, collinear
    corners and reflex corners are rejected.
    """

    vertices: list[Point]

    @model_validator(mode="before")
    @classmethod
    def _counterclockwise(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "vertices" not in data:
            return data
        vertices = [Point.model_validate(vertex) for vertex in data["vertices"]]
        if len(vertices) < 3:
            raise DegenerateShape(f"a polygon needs at least three vertices, got {len(vertices)}")
        coordinates = [vertex.coordinates for vertex in vertices]
        diagonal = bounding_box_diagonal(coordinates)
        for index, vertex in enumerate(vertices):
            following = vertices[(index + 1) % len(vertices)]
            if vertex.distance_to(following) <= DEFAULT_TOLERANCES.geometry * diagonal:
                raise DegenerateShape(f"polygon {coordinates} repeats the vertex {vertex.coordinates}")
        area_tolerance = DEFAULT_TOLERANCES.geometry * diagonal**2
        area2 = twice_signed_area(coordinates)
        if abs(area2) <= area_tolerance:
            raise DegenerateShape(f"polygon {coordinates} has (almost) zero area")
        if area2 < 0:
            _logger.debug("Reversing clockwise polygon %s", coordinates)
            vertices.reverse()
            coordinates.reverse()
        turning = 0.0
        for index, corner in enumerate(coordinates):
            previous = coordinates[index - 1]
            following = coordinates[(index + 1) % len(coordinates)]
            turn = cross(previous, corner, following)
            if turn <= area_tolerance:
                raise NotConvex(f"polygon {coordinates} is not strictly convex at {corner}")
            incoming = (corner[0] - previous[0], corner[1] - previous[1])
            outgoing = (following[0] - corner[0], following[1] - corner[1])
            turning += math.atan2(turn, incoming[0] * outgoing[0] + incoming[1] * outgoing[1])
        # a star polygon turns left at every corner too, but winds around more than once
        if abs(turning - 2.0 * math.pi) > 1e-6:
            raise NotConvex(f"polygon {coordinates} winds around its interior more than once")
        return {**data, "vertices": vertices}

    @classmethod
    def from_coordinates(cls, coordinates: Sequence[Sequence[float]]) -> "ConvexPolygon":
        """
        Builds a polygon from (x, y) pairs, e.g. ConvexPolygon.from_coordinates([(0, 0), (1, 0), (1, 1), (0, 1)]).
        """
        return cls(vertices=[Point(x=pair[0], y=pair[1]) for pair in coordinates])

    @property
    def vertex_list(self) -> list[Point]:
        return list(self.vertices)

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        """consecutive vertex pairs, the last one closing the polygon"""
        return [(vertex, self.vertices[(index + 1) % len(self.vertices)]) for index, vertex in enumerate(self.vertices)]
