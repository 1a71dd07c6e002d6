import math
from typing import Any, Dict, Optional

import pytest
from pydantic import BaseModel, ValidationError

from sumloci import (
    DEFAULT_TOLERANCES,
    ConvexPolygon,
    DegenerateLine,
    DegenerateNonElliptic,
    DegeneracyKind,
    DegeneratePoint,
    DegenerateShape,
    Direction,
    Ellipse,
    EllipseGeometry,
    Empty,
    GridSpec,
    InverseParameters,
    IsotropicConstant,
    KRange,
    LineOfMinima,
    NotConvex,
    OrientedLine,
    Point,
    PointHit,
    QuadraticForm,
    RigidMotion,
    Segment,
    SquaredMinimum,
    Triangle,
    TriangleClass,
    TriangleKind,
    UniquePoint,
    Vertex,
    WholePolygon,
)
from tests.serialization_helper import assert_serialization_roundtrip
from tests.utils import TEST_DATA, parse_file


class TestSerialization:
    @pytest.mark.parametrize(
        "model, expected_json_dict",
        [
            pytest.param(Point(x=1.5, y=-2.0), {"x": 1.5, "y": -2.0}, id="point"),
            pytest.param(
                Segment(start=Point(x=0.0, y=2.0), end=Point(x=1.0, y=0.0)),
                {"_typ": "SEGMENT", "start": {"x": 0.0, "y": 2.0}, "end": {"x": 1.0, "y": 0.0}},
                id="segment",
            ),
            pytest.param(Empty(), {"_typ": "EMPTY"}, id="empty"),
            pytest.param(WholePolygon(), {"_typ": "WHOLE_POLYGON"}, id="whole polygon"),
            pytest.param(IsotropicConstant(), {"_typ": "ISOTROPIC_CONSTANT"}, id="isotropic constant"),
            pytest.param(
                Vertex(point=Point(x=4.0, y=0.0)), {"_typ": "VERTEX", "point": {"x": 4.0, "y": 0.0}}, id="vertex"
            ),
            pytest.param(
                KRange(k_min=2.4, k_max=4.0), {"kMin": 2.4, "kMax": 4.0}, id="k range with camelCase keys"
            ),
            pytest.param(
                TriangleClass(kind=TriangleKind.SCALENE, right_angled=True),
                {"kind": "SCALENE", "rightAngled": True},
                id="triangle class",
            ),
            pytest.param(
                EllipseGeometry(center=Point(x=0.0, y=0.0), semi_major=2.0, semi_minor=1.0, rotation=0.5),
                {"center": {"x": 0.0, "y": 0.0}, "semiMajor": 2.0, "semiMinor": 1.0, "rotation": 0.5},
                id="ellipse geometry",
            ),
            pytest.param(
                QuadraticForm(A=1.0, B=0.0, C=1.0, D=0.0, E=0.0, F0=-1.0),
                {"A": 1.0, "B": 0.0, "C": 1.0, "D": 0.0, "E": 0.0, "F0": -1.0},
                id="quadratic form keeps its upper case keys",
            ),
        ],
    )
    def test_serialization_roundtrip(self, model: BaseModel, expected_json_dict: Optional[Dict[str, Any]]) -> None:
        assert_serialization_roundtrip(model, expected_json_dict)

    @pytest.mark.parametrize(
        "model",
        [
            pytest.param(Triangle.from_coordinates([(0, 0), (4, 0), (0, 3)]), id="triangle"),
            pytest.param(ConvexPolygon.from_coordinates([(0, 0), (1, 0), (1, 1), (0, 1)]), id="square"),
            pytest.param(OrientedLine.from_coefficients(3.0, 4.0, -12.0), id="oriented line"),
            pytest.param(PointHit(point=Point(x=1.0, y=1.0)), id="point hit"),
            pytest.param(Direction(x=0.6, y=-0.8), id="direction"),
            pytest.param(DegeneratePoint(point=Point(x=0.0, y=1.0)), id="degenerate point"),
            pytest.param(
                Ellipse(
                    geometry=EllipseGeometry(center=Point(x=1.0, y=1.0), semi_major=3.0, semi_minor=3.0, rotation=0.0)
                ),
                id="ellipse",
            ),
            pytest.param(
                DegenerateNonElliptic(
                    kind=DegeneracyKind.PARALLEL_PENCIL,
                    lines=[OrientedLine(a=0.0, b=1.0, c=0.0), OrientedLine(a=0.0, b=1.0, c=-2.0)],
                ),
                id="degenerate non elliptic",
            ),
            pytest.param(
                SquaredMinimum(k_min=2.0, argmin=LineOfMinima(line=OrientedLine(a=0.0, b=1.0, c=-1.0))),
                id="minimum on a line",
            ),
            pytest.param(
                SquaredMinimum(k_min=2.88, argmin=UniquePoint(point=Point(x=0.72, y=0.96))),
                id="minimum at a point",
            ),
            pytest.param(InverseParameters(a=1.0, b=1.0, l=0.5), id="inverse parameters"),
            pytest.param(RigidMotion(rotation=1.0, dx=2.0, dy=-3.0), id="rigid motion"),
        ],
    )
    def test_roundtrip_without_expectation(self, model: BaseModel) -> None:
        assert_serialization_roundtrip(model)

    def test_squared_minimum_keeps_the_argmin_variant(self) -> None:
        minimum = SquaredMinimum(k_min=2.0, argmin=LineOfMinima(line=OrientedLine(a=0.0, b=1.0, c=-1.0)))
        deserialized = SquaredMinimum.model_validate_json(minimum.model_dump_json(by_alias=True))
        assert isinstance(deserialized.argmin, LineOfMinima)

    def test_parse_triangle_file(self) -> None:
        triangle = parse_file(Triangle, TEST_DATA / "test_data_triangle" / "example1.json")
        assert isinstance(triangle, Triangle)
        # clockwise input is stored counterclockwise
        assert triangle.coordinates == [(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]

    def test_parse_collinear_triangle_file(self) -> None:
        with pytest.raises(DegenerateShape):
            parse_file(Triangle, TEST_DATA / "test_data_triangle" / "collinear.json")


class TestValidation:
    @pytest.mark.parametrize(
        "x, y",
        [
            pytest.param(math.nan, 0.0, id="nan"),
            pytest.param(0.0, math.inf, id="infinity"),
        ],
    )
    def test_non_finite_point(self, x: float, y: float) -> None:
        with pytest.raises(ValidationError):
            Point(x=x, y=y)

    def test_wrong_datatype(self) -> None:
        with pytest.raises(ValidationError) as excinfo:
            _ = Point(x="1,5", y=0.0)  # type: ignore[arg-type]

        assert "x" in str(excinfo.value)

    def test_models_are_frozen(self) -> None:
        point = Point(x=1.0, y=2.0)
        with pytest.raises(ValidationError):
            point.x = 3.0  # type: ignore[misc]

    def test_unnormalized_line(self) -> None:
        with pytest.raises(ValidationError):
            OrientedLine(a=1.0, b=1.0, c=0.0)

    def test_from_coefficients_normalizes(self) -> None:
        line = OrientedLine.from_coefficients(3.0, 4.0, -12.0)
        assert (line.a, line.b, line.c) == pytest.approx((0.6, 0.8, -2.4), abs=1e-15)

    def test_from_coefficients_rejects_vanishing_normal(self) -> None:
        with pytest.raises(DegenerateLine):
            OrientedLine.from_coefficients(0.0, 0.0, 1.0)

    def test_triangle_is_reordered_counterclockwise(self) -> None:
        triangle = Triangle.from_coordinates([(0, 0), (0, 3), (4, 0)])
        assert triangle.v1 == Point(x=4.0, y=0.0)
        assert triangle.v2 == Point(x=0.0, y=3.0)
        assert triangle.area == pytest.approx(6.0)

    @pytest.mark.parametrize(
        "coordinates",
        [
            pytest.param([(0, 0), (1, 1), (2, 2)], id="collinear"),
            pytest.param([(1, 1), (1, 1), (2, 0)], id="repeated vertex"),
            pytest.param([(0, 0), (1, 0)], id="two vertices"),
        ],
    )
    def test_degenerate_triangle(self, coordinates: list[tuple[float, float]]) -> None:
        with pytest.raises(DegenerateShape):
            Triangle.from_coordinates(coordinates)

    def test_clockwise_polygon_is_reversed(self) -> None:
        polygon = ConvexPolygon.from_coordinates([(0, 0), (0, 1), (1, 1), (1, 0)])
        assert polygon.area == pytest.approx(1.0)
        assert polygon.coordinates == [(1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)]

    @pytest.mark.parametrize(
        "coordinates, error",
        [
            pytest.param([(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)], NotConvex, id="reflex corner"),
            pytest.param([(0, 0), (1, 0), (2, 0), (1, 1)], NotConvex, id="collinear corner"),
            pytest.param(
                [(math.cos(4 * math.pi * i / 5), math.sin(4 * math.pi * i / 5)) for i in range(5)],
                NotConvex,
                id="pentagram",
            ),
            pytest.param([(0, 0), (1, 0)], DegenerateShape, id="two vertices"),
            pytest.param([(0, 0), (1, 0), (1, 0), (0, 1)], DegenerateShape, id="repeated vertex"),
            pytest.param([(0, 0), (1, 1), (2, 2)], DegenerateShape, id="no area"),
        ],
    )
    def test_invalid_polygon(self, coordinates: list[tuple[float, float]], error: type[Exception]) -> None:
        with pytest.raises(error):
            ConvexPolygon.from_coordinates(coordinates)

    def test_ellipse_axes_order(self) -> None:
        with pytest.raises(ValidationError):
            EllipseGeometry(center=Point(x=0.0, y=0.0), semi_major=1.0, semi_minor=2.0, rotation=0.0)

    def test_ellipse_rotation_range(self) -> None:
        with pytest.raises(ValidationError):
            EllipseGeometry(center=Point(x=0.0, y=0.0), semi_major=2.0, semi_minor=1.0, rotation=math.pi)

    @pytest.mark.parametrize(
        "resolution",
        [pytest.param(15, id="too coarse"), pytest.param(4097, id="too fine")],
    )
    def test_grid_resolution_bounds(self, resolution: int) -> None:
        with pytest.raises(ValidationError):
            GridSpec(bbox_min=Point(x=0.0, y=0.0), bbox_max=Point(x=1.0, y=1.0), resolution=resolution)

    def test_degenerate_grid_box(self) -> None:
        with pytest.raises(ValidationError):
            GridSpec(bbox_min=Point(x=0.0, y=0.0), bbox_max=Point(x=1.0, y=0.0), resolution=16)

    def test_default_tolerances(self) -> None:
        assert DEFAULT_TOLERANCES.geometry == 1e-9
        assert DEFAULT_TOLERANCES.normalization == 1e-12
        assert DEFAULT_TOLERANCES.classification == 1e-9
        assert DEFAULT_TOLERANCES.reconstruction == 1e-7
        assert DEFAULT_TOLERANCES.rank == 1e-14


class TestComponents:
    def test_quadratic_form_integer_coefficients(self) -> None:
        form = QuadraticForm(A=34 / 25, B=24 / 25, C=41 / 25, D=-72 / 25, E=-96 / 25, F0=19 / 25)
        assert form.integer_coefficients() == (34, 24, 41, -72, -96, 19)

    def test_quadratic_form_irrational_coefficients(self) -> None:
        form = QuadraticForm(A=math.sqrt(2), B=0.0, C=1.0, D=0.0, E=0.0, F0=-1.0)
        assert form.integer_coefficients() is None

    def test_quadratic_form_shift_and_evaluate(self) -> None:
        form = QuadraticForm(A=1.0, B=0.0, C=1.0, D=0.0, E=0.0, F0=0.0)
        shifted = form.shifted(4.0)
        assert shifted.F0 == -4.0
        assert shifted.evaluate(2.0, 0.0) == 0.0
        assert form.trace == 2.0

    def test_ellipse_points_lie_on_the_ellipse(self) -> None:
        geometry = EllipseGeometry(center=Point(x=1.0, y=-1.0), semi_major=3.0, semi_minor=1.0, rotation=0.3)
        points = geometry.points(32)
        cos_r, sin_r = math.cos(0.3), math.sin(0.3)
        for x, y in points:
            along = cos_r * (x - 1.0) + sin_r * (y + 1.0)
            across = -sin_r * (x - 1.0) + cos_r * (y + 1.0)
            assert along**2 / 9.0 + across**2 == pytest.approx(1.0, rel=1e-12)

    def test_grid_around(self) -> None:
        grid = GridSpec.around([Point(x=0.0, y=0.0), Point(x=4.0, y=3.0)], resolution=201)
        assert grid.bbox_min == Point(x=-0.8, y=-0.8)
        assert grid.bbox_max.x == pytest.approx(4.8)
        assert grid.bbox_max.y == pytest.approx(3.8)
        xs, ys = grid.mesh()
        assert xs.shape == ys.shape == (201, 201)

    def test_rigid_motion_keeps_signed_distances(self) -> None:
        motion = RigidMotion(rotation=0.7, dx=3.0, dy=-2.0)
        line = OrientedLine.from_coefficients(1.0, 2.0, -3.0)
        point = Point(x=-1.5, y=4.0)
        moved_line = motion.apply_line(line)
        moved_point = motion.apply_point(point)
        assert moved_line.evaluate(moved_point.x, moved_point.y) == pytest.approx(
            line.evaluate(point.x, point.y), abs=1e-12
        )

    def test_line_foot_and_reversal(self) -> None:
        line = OrientedLine(a=0.0, b=1.0, c=-1.0)
        assert line.foot_of(Point(x=3.0, y=5.0)) == Point(x=3.0, y=1.0)
        assert line.reversed().evaluate(0.0, 0.0) == 1.0
