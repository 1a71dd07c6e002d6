"""
Static vector figures of the loci, drawn with the object-oriented matplotlib API (no pyplot state).
"""

import logging
from itertools import cycle
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import matplotlib
import numpy as np
from matplotlib.axes import Axes
from matplotlib.figure import Figure

from ..bo.convexpolygon import ConvexPolygon
from ..bo.triangle import Triangle
from ..com.degeneratenonelliptic import DegenerateNonElliptic
from ..com.degeneratepoint import DegeneratePoint
from ..com.ellipse import Ellipse
from ..com.gridspec import GridSpec
from ..com.orientedline import OrientedLine
from ..com.point import Point
from ..com.segment import Segment
from ..com.variants import SquaredLocus, SumLocus
from ..com.vertex import Vertex
from ..com.wholepolygon import WholePolygon

_logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ("svg", "pdf", "eps")

LineStyle = Union[str, tuple[int, tuple[int, ...]]]

_DASHES: list[LineStyle] = [
    "solid",
    (0, (6, 3)),
    (0, (2, 2)),
    (0, (8, 2, 2, 2)),
    (0, (12, 4)),
    (0, (1, 3)),
    (0, (8, 2, 2, 2, 2, 2)),
]

_METADATA: dict[str, dict[str, Any]] = {
    "svg": {"Date": None},
    "pdf": {"CreationDate": None, "ModDate": None},
    "eps": {},
}

_ELLIPSE_SAMPLES = 256


def figure_format(path: Path) -> str:
    """
    The output format named by the file suffix; raises ValueError for anything but .svg, .pdf and .eps.
    """
    suffix = path.suffix.lower().lstrip(".")
    if suffix not in SUPPORTED_FORMATS:
        raise ValueError(f"cannot write a figure to '{path}', the suffix must be one of {SUPPORTED_FORMATS}")
    return suffix


def _draw_line(axes: Axes, line: OrientedLine, box: GridSpec, **style: Any) -> None:
    # long enough to cross the whole viewport from the foot of its center
    center = Point(x=0.5 * (box.bbox_min.x + box.bbox_max.x), y=0.5 * (box.bbox_min.y + box.bbox_max.y))
    reach = box.bbox_min.distance_to(box.bbox_max)
    foot = line.foot_of(center)
    d_x, d_y = line.direction
    axes.plot([foot.x - reach * d_x, foot.x + reach * d_x], [foot.y - reach * d_y, foot.y + reach * d_y], **style)


def _draw_locus(
    axes: Axes,
    locus: Union[SumLocus, SquaredLocus],
    label: str,
    dashes: LineStyle,
    shape: Optional[Union[Triangle, ConvexPolygon]],
    box: GridSpec,
) -> None:
    style: dict[str, Any] = {"color": "tab:blue", "linestyle": dashes, "linewidth": 1.2, "label": label}
    if isinstance(locus, Segment):
        axes.plot([locus.start.x, locus.end.x], [locus.start.y, locus.end.y], **style)
    elif isinstance(locus, (Vertex, DegeneratePoint)):
        axes.plot([locus.point.x], [locus.point.y], marker="o", color="tab:blue", linestyle="none", label=label)
    elif isinstance(locus, WholePolygon) and shape is not None:
        xs, ys = zip(*shape.coordinates)
        axes.fill(xs, ys, color="tab:blue", alpha=0.25, label=label)
    elif isinstance(locus, Ellipse):
        samples = locus.geometry.points(_ELLIPSE_SAMPLES)
        closed = np.vstack((samples, samples[:1]))
        axes.plot(closed[:, 0], closed[:, 1], **style)
    elif isinstance(locus, DegenerateNonElliptic):
        for index, line in enumerate(locus.lines):
            _draw_line(axes, line, box, **{**style, "label": label if index == 0 else None})


# pylint: disable=too-many-arguments
def write_figure(
    path: Path,
    extent: Sequence[Point],
    loci: Sequence[tuple[float, Union[SumLocus, SquaredLocus]]],
    shape: Optional[Union[Triangle, ConvexPolygon]] = None,
    lines: Sequence[OrientedLine] = (),
    title: Optional[str] = None,
) -> None:
    """
    Draws the shape (or the free lines) and one locus per k into a vector file. The viewport is the bounding box of
    `extent` plus 20% on every side; each k gets its own dash pattern.
    """
    file_format = figure_format(path)
    box = GridSpec.around(list(extent), resolution=16, margin=0.2)
    figure = Figure(figsize=(6.0, 6.0))
    axes = figure.add_subplot()
    if shape is not None:
        xs, ys = zip(*(shape.coordinates + shape.coordinates[:1]))
        axes.plot(xs, ys, color="black", linewidth=1.5)
    for line in lines:
        _draw_line(axes, line, box, color="black", linewidth=1.0)
    for (k, locus), dashes in zip(loci, cycle(_DASHES)):
        _draw_locus(axes, locus, f"k = {k:.6g}", dashes, shape, box)
    axes.set_xlim(box.bbox_min.x, box.bbox_max.x)
    axes.set_ylim(box.bbox_min.y, box.bbox_max.y)
    axes.set_aspect("equal", adjustable="datalim")
    axes.grid(True, linewidth=0.3)
    if title:
        axes.set_title(title)
    if axes.get_legend_handles_labels()[0]:
        axes.legend(loc="best", fontsize="small")
    with matplotlib.rc_context({"svg.hashsalt": "sumloci", "svg.fonttype": "path"}):
        figure.savefig(path, format=file_format, metadata=_METADATA[file_format])
    _logger.info("Wrote %s figure to %s", file_format, path)
