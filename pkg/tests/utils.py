"""
Utility functions for tests.
"""

import math
from pathlib import Path
from typing import Sequence

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel

from sumloci import EllipseGeometry, Point

TEST_DATA = Path(__file__).parent / "test_data"


def parse_file(model: type[BaseModel], path_to_file: Path | str) -> BaseModel:
    """
    Parses the given file as JSON and validates it against the given model.
    If the file is not valid JSON or does not match the model, a ValidationError is raised.
    Returns a validated instance of the given model.
    """
    with open(path_to_file, encoding="utf-8") as file:
        content = file.read()
    return model.model_validate_json(content)


def distance_to_segment(point: Point, start: Point, end: Point) -> float:
    """
    Euclidean distance of a point from the closed segment start-end.
    """
    d_x, d_y = end.x - start.x, end.y - start.y
    weight = ((point.x - start.x) * d_x + (point.y - start.y) * d_y) / (d_x * d_x + d_y * d_y)
    weight = min(1.0, max(0.0, weight))
    return math.hypot(point.x - (start.x + weight * d_x), point.y - (start.y + weight * d_y))


def distances_to_ellipse(
    points: Sequence[Point], geometry: EllipseGeometry, samples: int = 4096
) -> npt.NDArray[np.float64]:
    """
    Approximate distances of points from an ellipse, measured against a dense sample of the ellipse.
    """
    outline = geometry.points(samples)
    coordinates = np.array([point.coordinates for point in points]).reshape(-1, 2)
    differences = coordinates[:, None, :] - outline[None, :, :]
    return np.min(np.hypot(differences[..., 0], differences[..., 1]), axis=1)
