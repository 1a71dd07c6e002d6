"""
Contains GridSpec class
"""

from typing import Annotated

import numpy as np
import numpy.typing as npt
from pydantic import Field, model_validator

from .com import COM
from .point import Point

# pylint: disable=too-few-public-methods


class GridSpec(COM):
    """
    A regular sampling grid over an axis-parallel box, used by the brute-force oracles.
    """

    bbox_min: Point
    bbox_max: Point
    resolution: Annotated[int, Field(ge=16, le=4096)]
    """samples per axis, both box edges included"""

    @model_validator(mode="after")
    def _check_box(self) -> "GridSpec":
        if not (self.bbox_max.x > self.bbox_min.x and self.bbox_max.y > self.bbox_min.y):
            raise ValueError(f"box from {self.bbox_min} to {self.bbox_max} is degenerate")
        return self

    @classmethod
    def around(cls, points: list[Point], resolution: int, margin: float = 0.2) -> "GridSpec":
        """
        The bounding box of the points, widened by `margin` times its size on every side.
        """
        xs = [point.x for point in points]
        ys = [point.y for point in points]
        width = max(xs) - min(xs)
        height = max(ys) - min(ys)
        pad = margin * max(width, height, 1e-12)
        return cls(
            bbox_min=Point(x=min(xs) - pad, y=min(ys) - pad),
            bbox_max=Point(x=max(xs) + pad, y=max(ys) + pad),
            resolution=resolution,
        )

    @property
    def cell(self) -> tuple[float, float]:
        """spacing of neighbouring samples along x and y"""
        return (
            (self.bbox_max.x - self.bbox_min.x) / (self.resolution - 1),
            (self.bbox_max.y - self.bbox_min.y) / (self.resolution - 1),
        )

    def mesh(self) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        """
        Sample coordinates as two (resolution, resolution) arrays, rows running along y.
        """
        xs = np.linspace(self.bbox_min.x, self.bbox_max.x, self.resolution)
        ys = np.linspace(self.bbox_min.y, self.bbox_max.y, self.resolution)
        return np.meshgrid(xs, ys)
