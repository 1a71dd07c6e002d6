"""
Contains Triangle class
"""

import logging
from typing import Any, Sequence

from pydantic import model_validator

from .._planar import bounding_box_diagonal, twice_signed_area
from ..com.point import Point
from ..errors import DegenerateShape
from ..tolerances import DEFAULT_TOLERANCES
from .convexpolygon import ConvexPolygon
from .shape import Shape

_logger = logging.getLogger(__name__)

# pylint: disable=too-few-public-methods


class Triangle(Shape):
    """
    A non-degenerate triangle v0, v1, v2. If the vertices are given clockwise, v1 and v2 are swapped.
    """

    v0: Point
    v1: Point
    v2: Point

    @model_validator(mode="before")
    @classmethod
    def _counterclockwise(cls, data: Any) -> Any:
        if not isinstance(data, dict) or not {"v0", "v1", "v2"} <= data.keys():
            return data
        vertices = [Point.model_validate(data[key]) for key in ("v0", "v1", "v2")]
        coordinates = [vertex.coordinates for vertex in vertices]
        area2 = twice_signed_area(coordinates)
        if abs(area2) <= DEFAULT_TOLERANCES.geometry * bounding_box_diagonal(coordinates) ** 2:
            raise DegenerateShape(f"triangle {coordinates} has (almost) zero area")
        if area2 < 0:
            _logger.debug("Reordering clockwise triangle %s", coordinates)
            vertices[1], vertices[2] = vertices[2], vertices[1]
        return {**data, "v0": vertices[0], "v1": vertices[1], "v2": vertices[2]}

    @classmethod
    def from_coordinates(cls, coordinates: Sequence[Sequence[float]]) -> "Triangle":
        """
        Builds a triangle from three (x, y) pairs, e.g. Triangle.from_coordinates([(0, 0), (0, 3), (4, 0)]).
        """
        if len(coordinates) != 3:
            raise DegenerateShape(f"a triangle needs three vertices, got {len(coordinates)}")
        v_0, v_1, v_2 = (Point(x=pair[0], y=pair[1]) for pair in coordinates)
        return cls(v0=v_0, v1=v_1, v2=v_2)

    @property
    def vertex_list(self) -> list[Point]:
        return [self.v0, self.v1, self.v2]

    def as_polygon(self) -> ConvexPolygon:
        """
        The same figure as three-sided convex polygon.
        """
        return ConvexPolygon(vertices=self.vertex_list)
