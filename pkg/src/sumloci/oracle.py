"""
Brute-force backends that do not share code paths with the analytic solvers: distances are computed from the points
defining a line, sums are evaluated directly on dense numpy grids. Tests and the ``--verify`` flag of the command line
use them as ground truth.
"""

import logging
from typing import Callable, Sequence

import numpy as np
import numpy.typing as npt

from .com.gridspec import GridSpec
from .com.orientedline import OrientedLine
from .com.point import Point
from .errors import DegenerateLine, OutsideDomain
from .geometry import Polygonal, as_polygon

_logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
Objective = Callable[[FloatArray, FloatArray], FloatArray]
"""a function of the plane, evaluated elementwise on coordinate arrays x and y of equal shape"""

_REFINEMENT_ROUNDS = 3
_SHRINK = 10.0


def point_line_distance(p: Point, q: Point, x: Point) -> float:
    """
    Distance of x from the line through p and q, as |(q - p) x (x - p)| / |q - p|.
    """
    length = p.distance_to(q)
    if length == 0.0:
        raise DegenerateLine(f"points {p.coordinates} and {q.coordinates} do not define a line")
    return abs((q.x - p.x) * (x.y - p.y) - (q.y - p.y) * (x.x - p.x)) / length


def distance_sum_objective(poly: Polygonal) -> Objective:
    """
    V evaluated directly as the sum of the distances to the side lines; NaN outside the closed polygon.
    """
    polygon = as_polygon(poly)
    edges = polygon.edges
    tolerance = polygon.length_tolerance

    def objective(x: FloatArray, y: FloatArray) -> FloatArray:
        total = np.zeros(np.shape(x))
        inside = np.ones(np.shape(x), dtype=bool)
        for start, end in edges:
            length = start.distance_to(end)
            # counterclockwise vertices: the inside is to the left of every edge
            left = ((end.x - start.x) * (y - start.y) - (end.y - start.y) * (x - start.x)) / length
            total += np.abs(left)
            inside &= left >= -tolerance
        return np.where(inside, total, np.nan)

    return objective


def squared_sum_objective(lines: Sequence[OrientedLine]) -> Objective:
    """
    Q evaluated directly as the sum of the squared distances to the lines.
    """
    frozen = list(lines)

    def objective(x: FloatArray, y: FloatArray) -> FloatArray:
        total = np.zeros(np.shape(x))
        for line in frozen:
            total += line.evaluate(x, y) ** 2
        return total

    return objective


def _best_sample(objective: Objective, grid: GridSpec) -> tuple[float, Point]:
    xs, ys = grid.mesh()
    values = objective(xs, ys)
    if np.all(np.isnan(values)):
        raise OutsideDomain(f"objective is undefined on the whole grid from {grid.bbox_min} to {grid.bbox_max}")
    row, column = np.unravel_index(np.nanargmin(values), values.shape)
    return float(values[row, column]), Point(x=float(xs[row, column]), y=float(ys[row, column]))


def grid_min(objective: Objective, grid: GridSpec) -> tuple[float, Point]:
    """
    Smallest value of the objective over the grid samples, refined by re-sampling a box around the best sample that
    is ten times smaller (but at least two cells wide on each side), three times.
    """
    value, best = _best_sample(objective, grid)
    width = grid.bbox_max.x - grid.bbox_min.x
    height = grid.bbox_max.y - grid.bbox_min.y
    current = grid
    for _ in range(_REFINEMENT_ROUNDS):
        cell_x, cell_y = current.cell
        half_x = max(width / (2 * _SHRINK), 2 * cell_x)
        half_y = max(height / (2 * _SHRINK), 2 * cell_y)
        current = GridSpec(
            bbox_min=Point(x=best.x - half_x, y=best.y - half_y),
            bbox_max=Point(x=best.x + half_x, y=best.y + half_y),
            resolution=grid.resolution,
        )
        candidate, candidate_point = _best_sample(objective, current)
        if candidate <= value:
            value, best = candidate, candidate_point
        width, height = 2 * half_x, 2 * half_y
    _logger.debug("Grid minimum %s at %s", value, best.coordinates)
    return value, best


def grid_level_points(objective: Objective, k: float, grid: GridSpec, tol: float) -> list[Point]:
    """
    All grid samples where the objective is within tol of k, row by row. Samples where the objective is NaN never
    qualify.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    xs, ys = grid.mesh()
    with np.errstate(invalid="ignore"):
        hits = np.abs(objective(xs, ys) - k) <= tol
    return [Point(x=float(x), y=float(y)) for x, y in zip(xs[hits], ys[hits])]
