import math

import numpy as np
import pytest
from hypothesis import given, settings

from sumloci import (
    DegenerateLine,
    GridSpec,
    OutsideDomain,
    Point,
    Segment,
    Triangle,
    distance_sum_form,
    distance_sum_objective,
    ellipse_geometry,
    grid_level_points,
    grid_min,
    min_squared_sum,
    point_line_distance,
    sides_of,
    squared_sum_objective,
    sum_locus,
)
from tests.strategies import triangles
from tests.utils import distance_to_segment, distances_to_ellipse

EXAMPLE_TRIANGLE = Triangle.from_coordinates([(0, 0), (0, 3), (4, 0)])
EXAMPLE_GRID = GridSpec.around(EXAMPLE_TRIANGLE.vertex_list, resolution=201)


class TestObjectives:
    def test_point_line_distance(self) -> None:
        distance = point_line_distance(Point(x=0.0, y=0.0), Point(x=4.0, y=0.0), Point(x=1.0, y=-3.0))
        assert distance == pytest.approx(3.0)

    def test_point_line_distance_needs_two_points(self) -> None:
        with pytest.raises(DegenerateLine):
            point_line_distance(Point(x=1.0, y=1.0), Point(x=1.0, y=1.0), Point(x=0.0, y=0.0))

    def test_distance_sum_objective(self) -> None:
        objective = distance_sum_objective(EXAMPLE_TRIANGLE)
        values = objective(np.array([1.0, 0.0, 5.0]), np.array([1.0, 0.0, 5.0]))
        assert values[0] == pytest.approx(3.0)
        assert values[1] == pytest.approx(2.4)
        assert math.isnan(values[2])

    def test_squared_sum_objective(self) -> None:
        objective = squared_sum_objective(sides_of(EXAMPLE_TRIANGLE))
        assert float(objective(np.array(0.72), np.array(0.96))) == pytest.approx(2.88)

    @given(triangle=triangles())
    @settings(max_examples=50, deadline=None)
    def test_objective_matches_the_linear_form_inside(self, triangle: Triangle) -> None:
        centroid = triangle.centroid
        value = distance_sum_objective(triangle)(np.array([centroid.x]), np.array([centroid.y]))[0]
        form = distance_sum_form(triangle)
        assert value == pytest.approx(form.evaluate(centroid.x, centroid.y), rel=1e-9)


class TestGridMin:
    def test_squared_sum_of_example_triangle(self) -> None:
        value, argmin = grid_min(squared_sum_objective(sides_of(EXAMPLE_TRIANGLE)), EXAMPLE_GRID)
        assert value == pytest.approx(2.88, rel=1e-4)
        assert argmin.coordinates == pytest.approx((0.72, 0.96), abs=1e-3)

    def test_distance_sum_of_example_triangle(self) -> None:
        value, argmin = grid_min(distance_sum_objective(EXAMPLE_TRIANGLE), EXAMPLE_GRID)
        assert value == pytest.approx(2.4, rel=1e-4)
        assert argmin.distance_to(Point(x=0.0, y=0.0)) <= 1e-3

    def test_objective_undefined_everywhere(self) -> None:
        far_away = GridSpec(bbox_min=Point(x=10.0, y=10.0), bbox_max=Point(x=11.0, y=11.0), resolution=16)
        with pytest.raises(OutsideDomain):
            grid_min(distance_sum_objective(EXAMPLE_TRIANGLE), far_away)

    @given(triangle=triangles())
    @settings(max_examples=20, deadline=None)
    def test_agrees_with_the_analytic_minimum(self, triangle: Triangle) -> None:
        lines = sides_of(triangle)
        grid = GridSpec.around(triangle.vertex_list, resolution=201)
        value, _ = grid_min(squared_sum_objective(lines), grid)
        assert value == pytest.approx(min_squared_sum(lines).k_min, rel=1e-4)


class TestGridLevelPoints:
    def test_distance_sum_level_points_lie_on_the_chord(self) -> None:
        cell = max(EXAMPLE_GRID.cell)
        form = distance_sum_form(EXAMPLE_TRIANGLE)
        points = grid_level_points(
            distance_sum_objective(EXAMPLE_TRIANGLE), 2.8, EXAMPLE_GRID, tol=form.gradient_norm * cell
        )
        chord = sum_locus(EXAMPLE_TRIANGLE, 2.8)
        assert isinstance(chord, Segment)
        assert points
        assert max(distance_to_segment(point, chord.start, chord.end) for point in points) <= 3 * cell

    def test_squared_sum_level_points_lie_on_the_ellipse(self) -> None:
        cell = max(EXAMPLE_GRID.cell)
        lines = sides_of(EXAMPLE_TRIANGLE)
        points = grid_level_points(squared_sum_objective(lines), 5.0, EXAMPLE_GRID, tol=cell)
        assert points
        distances = distances_to_ellipse(points, ellipse_geometry(lines, 5.0))
        assert float(np.max(distances)) <= 3 * cell

    @given(triangle=triangles())
    @settings(max_examples=10, deadline=None)
    def test_random_ellipses(self, triangle: Triangle) -> None:
        lines = sides_of(triangle)
        k = 2.0 * min_squared_sum(lines).k_min
        geometry = ellipse_geometry(lines, k)
        grid = GridSpec.around(triangle.vertex_list + [geometry.center], resolution=201, margin=1.0)
        cell = max(grid.cell)
        points = grid_level_points(squared_sum_objective(lines), k, grid, tol=k * 1e-3)
        if points:
            assert float(np.max(distances_to_ellipse(points, geometry))) <= 3 * cell

    def test_constant_objective_has_no_level_points_elsewhere(self) -> None:
        points = grid_level_points(lambda x, y: np.ones_like(x), 5.0, EXAMPLE_GRID, tol=0.1)
        assert points == []

    def test_points_come_row_by_row(self) -> None:
        points = grid_level_points(lambda x, y: np.zeros_like(x), 0.0, EXAMPLE_GRID, tol=0.1)
        assert len(points) == 201 * 201
        assert points[0] == EXAMPLE_GRID.bbox_min
        assert points[1].y == points[0].y
        assert points[1].x > points[0].x

    @pytest.mark.parametrize("tol", [pytest.param(0.0, id="zero"), pytest.param(-1.0, id="negative")])
    def test_tolerance_must_be_positive(self, tol: float) -> None:
        with pytest.raises(ValueError):
            grid_level_points(lambda x, y: x, 0.0, EXAMPLE_GRID, tol=tol)
