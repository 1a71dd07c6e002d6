"""
The sumloci command line: one subcommand per analysis, each printing a single JSON document to stdout.

Exit status 0 on success, 2 for an invalid scene or invalid parameters, 3 for malformed flags (including the k-list).
"""

import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

import click
import numpy as np
from pydantic import ValidationError

from ..bo.triangle import Triangle
from ..com.ellipse import Ellipse
from ..com.gridspec import GridSpec
from ..com.orientedline import OrientedLine
from ..com.point import Point
from ..com.segment import Segment
from ..com.uniquepoint import UniquePoint
from ..com.variants import Argmin, SquaredLocus, SumLocus
from ..com.vertex import Vertex
from ..errors import GeometryError, SceneError
from ..geometry import Polygonal, classify_triangle, sides_of
from ..inverse import canonical_rhs, reconstruction_residual, triangle_from_ellipse
from ..linear import distance_sum_form, is_viviani, k_range, level_direction, level_segments, sum_locus
from ..oracle import distance_sum_objective, grid_min, squared_sum_objective
from ..quadratic import (
    classify_squared_locus,
    discriminant,
    is_circle_locus,
    isosceles_minimum,
    min_squared_sum,
    squared_sum_form,
)
from ..version import __version__
from .figure import figure_format, write_figure
from .report import dump, equation, render
from .scene import SceneInput, build_scene, parse_k_list

_logger = logging.getLogger(__name__)

INVALID_SCENE = 2
MALFORMED_FLAGS = 3

_LEVEL_SEGMENT_COUNT = 5
_LOCUS_SAMPLES = 64

F = TypeVar("F", bound=Callable[..., Any])


class KList(click.ParamType):
    """
    A comma separated list of finite numbers, e.g. 2.8,3.2,3.6
    """

    name = "k-list"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> list[float]:
        if isinstance(value, list):
            return value
        try:
            return parse_k_list(value)
        except ValueError:
            self.fail(f"'{value}' is not a comma separated list of finite numbers", param, ctx)


class SumlociGroup(click.Group):
    """
    A click group that maps domain errors to exit status 2 and usage errors to exit status 3.
    """

    # pylint: disable=arguments-differ
    def main(self, *args: Any, standalone_mode: bool = True, **extra: Any) -> Any:
        try:
            return super().main(*args, standalone_mode=False, **extra)
        except click.UsageError as error:
            error.show()
            exit_code = MALFORMED_FLAGS
        except (GeometryError, ValidationError) as error:
            _logger.debug("Rejected input", exc_info=True)
            click.echo(f"Error: {error}", err=True)
            exit_code = INVALID_SCENE
        except click.ClickException as error:
            error.show()
            exit_code = error.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            exit_code = 1
        if standalone_mode:
            sys.exit(exit_code)
        return exit_code


def _check_plot_path(_ctx: click.Context, _param: click.Parameter, value: Optional[Path]) -> Optional[Path]:
    if value is None:
        return None
    try:
        figure_format(value)
    except ValueError as error:
        raise click.BadParameter(str(error)) from error
    return value


def _scene_options(func: F) -> F:
    options = [
        click.option("--triangle", help='three vertices, e.g. "0,0 0,3 4,0"', type=click.STRING),
        click.option("--polygon", help='vertices of a convex polygon, e.g. "0,0 1,0 1,1 0,1"', type=click.STRING),
        click.option("--lines", help='lines through two points each, e.g. "0,0 1,0; 0,2 1,2"', type=click.STRING),
        click.option(
            "--scene",
            "scene_file",
            help="JSON scene file with the keys triangle, polygon, lines, k, alpha and beta",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
        ),
        click.option(
            "--plot",
            help="write a figure to this .svg, .pdf or .eps file",
            type=click.Path(dir_okay=False, path_type=Path),
            callback=_check_plot_path,
        ),
        click.option("--verify", is_flag=True, help="cross-check the results with the brute-force grid oracle"),
        click.option(
            "--grid-resolution",
            help="samples per axis of the verification grid",
            type=click.IntRange(16, 4096),
            envvar="SUMLOCI_GRID_RESOLUTION",
            default=201,
            show_default=True,
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _k_option(help_text: str) -> Callable[[F], F]:
    return click.option("--k", "k_values", help=help_text, type=KList(), default=None)


def _describe(scene: SceneInput) -> dict[str, Any]:
    description: dict[str, Any] = {}
    if scene.shape is not None:
        corners = scene.given_vertices if scene.given_vertices is not None else scene.shape.coordinates
        description["triangle" if scene.triangle is not None else "polygon"] = [list(pair) for pair in corners]
    elif scene.lines is not None:
        description["lines"] = [[list(start.coordinates), list(end.coordinates)] for start, end in scene.lines]
    if scene.k is not None:
        description["k"] = list(scene.k)
    return description


def _value_at(objective: Callable[..., Any], point: Point) -> float:
    return float(objective(np.array([point.x]), np.array([point.y]))[0])


def _require_shape(scene: SceneInput, command: str) -> Polygonal:
    if scene.shape is None:
        raise SceneError(f"{command} needs a triangle or a polygon")
    return scene.shape


def _grid_check(objective: Callable[..., Any], extent: list[Point], resolution: int, expected: float) -> dict[str, Any]:
    value, where = grid_min(objective, GridSpec.around(extent, resolution=resolution))
    return {"gridMin": value, "gridArgmin": dump(where), "delta": abs(value - expected)}


@click.group(cls=SumlociGroup)
@click.option(
    "--log-level",
    help="logging level of the messages written to stderr",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    envvar="SUMLOCI_LOG_LEVEL",
    default="WARNING",
    show_default=True,
)
@click.version_option(__version__, prog_name="sumloci")
def main(log_level: str) -> None:
    """sums of distances and of squared distances to the sides of triangles, polygons and line sets"""
    logging.basicConfig(level=log_level.upper(), stream=sys.stderr)
    _logger.debug("Log level %s", log_level)


# pylint: disable=too-many-arguments, too-many-locals
@main.command("sum-locus")
@_scene_options
@_k_option("values of the distance sum, e.g. 2.8,3.2,3.6; without it five evenly spaced levels are reported")
def sum_locus_command(
    triangle: Optional[str],
    polygon: Optional[str],
    lines: Optional[str],
    scene_file: Optional[Path],
    plot: Optional[Path],
    verify: bool,
    grid_resolution: int,
    k_values: Optional[list[float]],
) -> None:
    """the points of a polygon whose distances to the sides add up to k"""
    scene = build_scene(triangle=triangle, polygon=polygon, lines=lines, scene_file=scene_file, k=k_values)
    shape = _require_shape(scene, "sum-locus")
    attainable = k_range(shape)
    analysis: dict[str, Any] = {
        "linearForm": dump(distance_sum_form(shape)),
        "kRange": dump(attainable),
        "levelDirection": dump(level_direction(shape)),
        "viviani": is_viviani(shape),
    }
    if isinstance(shape, Triangle):
        analysis["triangleClass"] = dump(classify_triangle(shape))
    if scene.k is None:
        loci: list[tuple[float, SumLocus]] = level_segments(shape, _LEVEL_SEGMENT_COUNT)
    else:
        loci = [(k, sum_locus(shape, k)) for k in scene.k]
    for k, locus in loci:
        _logger.info("T_%s: %s", k, locus.typ)
    results = [{"k": k, "inRange": attainable.contains(k), "locus": dump(locus)} for k, locus in loci]
    verification = None
    if verify:
        objective = distance_sum_objective(shape)
        residual = 0.0
        for k, locus in loci:
            if isinstance(locus, Segment):
                ends = [locus.start, locus.end]
            elif isinstance(locus, Vertex):
                ends = [locus.point]
            else:
                continue
            residual = max(residual, *(abs(_value_at(objective, end) - k) for end in ends))
        verification = {
            "maxEndpointResidual": residual,
            **_grid_check(objective, shape.vertex_list, grid_resolution, attainable.k_min),
        }
    if plot is not None:
        write_figure(plot, shape.vertex_list, loci, shape=shape, title="sum of distances to the sides")
    click.echo(render(_describe(scene), analysis, results, verification))


def _extent(scene: SceneInput, lines: list[OrientedLine], argmin: Argmin) -> list[Point]:
    extent = list(scene.points)
    if isinstance(argmin, UniquePoint):
        extent.append(argmin.point)
    elif extent:
        extent.append(argmin.line.foot_of(extent[0]))
    else:
        extent.append(lines[0].foot_of(Point(x=0.0, y=0.0)))
    return extent


@main.command("squared-locus")
@_scene_options
@_k_option("values of the sum of squared distances, e.g. 1,2,3")
def squared_locus_command(
    triangle: Optional[str],
    polygon: Optional[str],
    lines: Optional[str],
    scene_file: Optional[Path],
    plot: Optional[Path],
    verify: bool,
    grid_resolution: int,
    k_values: Optional[list[float]],
) -> None:
    """the points of the plane whose squared distances to the lines add up to k"""
    scene = build_scene(triangle=triangle, polygon=polygon, lines=lines, scene_file=scene_file, k=k_values)
    if scene.k is None:
        raise click.UsageError("squared-locus needs --k or a scene file with k")
    side_lines = scene.oriented_lines
    form = squared_sum_form(side_lines)
    minimum = min_squared_sum(side_lines)
    analysis: dict[str, Any] = {
        "quadraticForm": dump(form),
        "discriminant": discriminant(form),
        "kMin": minimum.k_min,
        "argmin": dump(minimum.argmin),
    }
    if scene.triangle is not None:
        analysis["circles"] = is_circle_locus(scene.triangle)
    loci: list[tuple[float, SquaredLocus]] = [(k, classify_squared_locus(side_lines, k)) for k in scene.k]
    results = [{"k": k, "locus": dump(locus), "equation": equation(form.shifted(k))} for k, locus in loci]
    extent = _extent(scene, side_lines, minimum.argmin)
    verification = None
    if verify:
        objective = squared_sum_objective(side_lines)
        residual = 0.0
        for k, locus in loci:
            if isinstance(locus, Ellipse):
                samples = locus.geometry.points(_LOCUS_SAMPLES)
                residual = max(residual, float(np.max(np.abs(objective(samples[:, 0], samples[:, 1]) - k))))
        verification = {
            "maxLocusResidual": residual,
            **_grid_check(objective, extent, grid_resolution, minimum.k_min),
        }
    if plot is not None:
        write_figure(
            plot,
            extent,
            loci,
            shape=scene.shape,
            lines=side_lines if scene.shape is None else (),
            title="sum of squared distances to the sides",
        )
    click.echo(render(_describe(scene), analysis, results, verification))


@main.command("min-squares")
@_scene_options
def min_squares_command(
    triangle: Optional[str],
    polygon: Optional[str],
    lines: Optional[str],
    scene_file: Optional[Path],
    plot: Optional[Path],
    verify: bool,
    grid_resolution: int,
) -> None:
    """the minimal sum of squared distances to the lines and where it is attained"""
    scene = build_scene(triangle=triangle, polygon=polygon, lines=lines, scene_file=scene_file)
    side_lines = scene.oriented_lines
    form = squared_sum_form(side_lines)
    minimum = min_squared_sum(side_lines)
    analysis = {"quadraticForm": dump(form), "discriminant": discriminant(form)}
    results = [dump(minimum)]
    extent = _extent(scene, side_lines, minimum.argmin)
    verification = None
    if verify:
        verification = _grid_check(squared_sum_objective(side_lines), extent, grid_resolution, minimum.k_min)
    if plot is not None:
        locus = classify_squared_locus(side_lines, minimum.k_min)
        write_figure(
            plot,
            extent,
            [(minimum.k_min, locus)],
            shape=scene.shape,
            lines=side_lines if scene.shape is None else (),
            title="minimal sum of squared distances",
        )
    click.echo(render(_describe(scene), analysis, results, verification))


@main.command("triangle-from-ellipse")
@click.option("--alpha", help="semi-major axis of the ellipse x²/α² + y²/β² = 1", type=click.FLOAT)
@click.option("--beta", help="semi-minor axis, 0 < β ≤ α", type=click.FLOAT)
@click.option(
    "--scene",
    "scene_file",
    help="JSON scene file with the keys alpha and beta",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--plot",
    help="write a figure to this .svg, .pdf or .eps file",
    type=click.Path(dir_okay=False, path_type=Path),
    callback=_check_plot_path,
)
@click.option("--verify", is_flag=True, help="cross-check the minimal sum with the brute-force grid oracle")
@click.option(
    "--grid-resolution",
    help="samples per axis of the verification grid",
    type=click.IntRange(16, 4096),
    envvar="SUMLOCI_GRID_RESOLUTION",
    default=201,
    show_default=True,
)
def triangle_from_ellipse_command(
    alpha: Optional[float],
    beta: Optional[float],
    scene_file: Optional[Path],
    plot: Optional[Path],
    verify: bool,
    grid_resolution: int,
) -> None:
    """an isosceles triangle and a k whose squared-distance locus is the ellipse x²/α² + y²/β² = 1"""
    scene = build_scene(scene_file=scene_file, alpha=alpha, beta=beta)
    if scene.alpha is None or scene.beta is None:
        raise click.UsageError("triangle-from-ellipse needs --alpha and --beta")
    result = triangle_from_ellipse(scene.alpha, scene.beta)
    side_lines = sides_of(result.triangle)
    locus = classify_squared_locus(side_lines, result.k)
    params = result.params
    analysis = {"params": dump(params), "canonicalRhs": canonical_rhs(params.a, params.b, result.k)}
    results = [
        {
            "triangle": [list(pair) for pair in result.triangle.coordinates],
            "k": result.k,
            "locus": dump(locus),
            "reflectedTriangle": [list(pair) for pair in result.reflected().triangle.coordinates],
        }
    ]
    verification: dict[str, Any] = {"roundtripResidual": reconstruction_residual(result, scene.alpha, scene.beta)}
    if verify:
        expected = isosceles_minimum(params.a, params.b).k_min
        verification.update(
            _grid_check(squared_sum_objective(side_lines), result.triangle.vertex_list, grid_resolution, expected)
        )
    if plot is not None:
        extent = result.triangle.vertex_list + [
            Point(x=-scene.alpha, y=-scene.beta),
            Point(x=scene.alpha, y=scene.beta),
        ]
        write_figure(plot, extent, [(result.k, locus)], shape=result.triangle, title="triangle for a given ellipse")
    click.echo(render({"alpha": scene.alpha, "beta": scene.beta}, analysis, results, verification))
