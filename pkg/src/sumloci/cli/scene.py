"""
Contains the SceneInput class and the parsers for inline scene flags and scene files
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import FiniteFloat, ValidationError, model_validator

from ..bo.convexpolygon import ConvexPolygon
from ..bo.triangle import Triangle
from ..com.com import COM
from ..com.orientedline import OrientedLine
from ..com.point import Point
from ..errors import SceneError
from ..geometry import line_through, sides_of

_logger = logging.getLogger(__name__)

_SCENE_KEYS = {"triangle", "polygon", "lines", "k", "alpha", "beta"}

# pylint: disable=too-few-public-methods


class SceneInput(COM):
    """
    What a command works on: at most one of a triangle, a convex polygon or a free set of lines (each given by two
    points), plus the analysis parameters.
    """

    triangle: Optional[Triangle] = None
    polygon: Optional[ConvexPolygon] = None
    lines: Optional[list[tuple[Point, Point]]] = None
    k: Optional[list[FiniteFloat]] = None
    alpha: Optional[FiniteFloat] = None
    beta: Optional[FiniteFloat] = None
    given_vertices: Optional[list[tuple[FiniteFloat, FiniteFloat]]] = None
    """the triangle or polygon corners in the order they were given, before the counterclockwise reordering"""

    @model_validator(mode="after")
    def _one_shape(self) -> "SceneInput":
        given = [name for name in ("triangle", "polygon", "lines") if getattr(self, name) is not None]
        if len(given) > 1:
            raise SceneError(f"a scene holds one shape, got {' and '.join(given)}")
        if self.lines is not None and not self.lines:
            raise SceneError("a line set needs at least one line")
        return self

    @property
    def shape(self) -> Optional[Union[Triangle, ConvexPolygon]]:
        """the triangle or polygon, if any"""
        return self.triangle if self.triangle is not None else self.polygon

    @property
    def oriented_lines(self) -> list[OrientedLine]:
        """the side lines of the shape or the free lines"""
        if self.shape is not None:
            return sides_of(self.shape)
        if self.lines is not None:
            return [line_through(start, end) for start, end in self.lines]
        raise SceneError("the scene has neither a shape nor lines")

    @property
    def points(self) -> list[Point]:
        """every point that defines the scene, used for viewports and grids"""
        if self.shape is not None:
            return self.shape.vertex_list
        if self.lines is not None:
            return [point for pair in self.lines for point in pair]
        return []


def parse_points(text: str) -> list[tuple[float, float]]:
    """
    Parses whitespace separated "x,y" pairs, e.g. "0,0 0,3 4,0".
    """
    pairs = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise SceneError(f"'{token}' is not a point of the form x,y")
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError as error:
            raise SceneError(f"'{token}' is not a point of the form x,y") from error
    if not pairs:
        raise SceneError(f"no points in '{text}'")
    return pairs


def parse_lines(text: str) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """
    Parses lines given by two points each, separated by semicolons, e.g. "0,0 1,0; 0,2 1,2".
    """
    lines = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        points = parse_points(chunk)
        if len(points) != 2:
            raise SceneError(f"a line needs exactly two points, got '{chunk.strip()}'")
        lines.append((points[0], points[1]))
    if not lines:
        raise SceneError(f"no lines in '{text}'")
    return lines


def parse_k_list(text: str) -> list[float]:
    """
    Parses a comma separated list of numbers, e.g. "2.8,3.2,3.6". Raises ValueError for anything else.
    """
    values = [float(part) for part in text.split(",")]
    if not all(math.isfinite(value) for value in values):
        raise ValueError(f"'{text}' contains a non-finite number")
    return values


def load_scene_file(path: Path) -> dict[str, Any]:
    """
    Reads a JSON scene file, e.g. {"triangle": [[0, 0], [0, 3], [4, 0]], "k": [2.8, 3.2]}.
    """
    try:
        with open(path, "r", encoding="utf-8") as scene_file:
            content = json.load(scene_file)
    except (OSError, json.JSONDecodeError) as error:
        raise SceneError(f"cannot read scene file {path}: {error}") from error
    if not isinstance(content, dict):
        raise SceneError(f"scene file {path} must contain a JSON object")
    unknown = set(content) - _SCENE_KEYS
    if unknown:
        raise SceneError(f"scene file {path} has unknown keys {sorted(unknown)}")
    return content


def _pairs(raw: Any, what: str) -> list[tuple[float, float]]:
    try:
        return [(float(x), float(y)) for x, y in raw]
    except (TypeError, ValueError) as error:
        raise SceneError(f"{what} must be a list of [x, y] pairs, got {raw!r}") from error


# pylint: disable=too-many-arguments
def build_scene(
    *,
    triangle: Optional[str] = None,
    polygon: Optional[str] = None,
    lines: Optional[str] = None,
    scene_file: Optional[Path] = None,
    k: Optional[list[float]] = None,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
) -> SceneInput:
    """
    Combines a scene file with inline flags; inline flags take precedence over the file.
    Shapes are validated on construction, so a degenerate or non-convex input raises here.
    """
    raw: dict[str, Any] = load_scene_file(scene_file) if scene_file is not None else {}
    if triangle is not None or polygon is not None or lines is not None:
        for key in ("triangle", "polygon", "lines"):
            raw.pop(key, None)
    values: dict[str, Any] = {}
    triangle_pairs = parse_points(triangle) if triangle is not None else raw.get("triangle")
    if triangle_pairs is not None:
        values["given_vertices"] = _pairs(triangle_pairs, "triangle")
        values["triangle"] = Triangle.from_coordinates(values["given_vertices"])
    polygon_pairs = parse_points(polygon) if polygon is not None else raw.get("polygon")
    if polygon_pairs is not None:
        values["given_vertices"] = _pairs(polygon_pairs, "polygon")
        values["polygon"] = ConvexPolygon.from_coordinates(values["given_vertices"])
    line_pairs: Any = parse_lines(lines) if lines is not None else raw.get("lines")
    if line_pairs is not None:
        values["lines"] = []
        for pair in line_pairs:
            points = _pairs(pair, "a line")
            if len(points) != 2:
                raise SceneError(f"a line needs exactly two points, got {pair!r}")
            start, end = points
            values["lines"].append((Point(x=start[0], y=start[1]), Point(x=end[0], y=end[1])))
    for key, inline in (("k", k), ("alpha", alpha), ("beta", beta)):
        value = inline if inline is not None else raw.get(key)
        if value is not None:
            values[key] = value
    try:
        scene = SceneInput(**values)
    except ValidationError as error:
        raise SceneError(f"invalid scene: {error}") from error
    _logger.debug("Scene %s", scene)
    return scene
