"""
Contains the base class of all shapes
"""

from humps.main import camelize

# pylint: disable=no-name-in-module
from pydantic import BaseModel, ConfigDict

from .._planar import area_centroid, bounding_box_diagonal, twice_signed_area
from ..com.point import Point
from ..tolerances import DEFAULT_TOLERANCES

# pylint: disable=too-few-public-methods


class Shape(BaseModel):
    """
    The shape Shape is the master for all shapes. Vertices are stored counterclockwise; constructors of the derived
    classes reorder them and reject degenerate input, so every formula downstream may assume a genuine figure.
    """

    # pylint: disable=duplicate-code
    # basic configuration for pydantic's behaviour
    model_config = ConfigDict(
        alias_generator=camelize,
        populate_by_name=True,
        extra="forbid",
        frozen=True,
        use_attribute_docstrings=True,
    )

    @property
    def vertex_list(self) -> list[Point]:
        """the corners in counterclockwise order"""
        raise NotImplementedError("This property should be overridden.")

    @property
    def coordinates(self) -> list[tuple[float, float]]:
        """the corners as plain (x, y) tuples"""
        return [vertex.coordinates for vertex in self.vertex_list]

    @property
    def diagonal(self) -> float:
        """length of the diagonal of the bounding box, the scale all tolerances refer to"""
        return bounding_box_diagonal(self.coordinates)

    @property
    def area(self) -> float:
        """enclosed area, positive"""
        return 0.5 * twice_signed_area(self.coordinates)

    @property
    def centroid(self) -> Point:
        """centroid of the enclosed area"""
        c_x, c_y = area_centroid(self.coordinates)
        return Point(x=c_x, y=c_y)

    @property
    def area_tolerance(self) -> float:
        """εarea: twice-signed areas at or below this value count as zero"""
        return DEFAULT_TOLERANCES.geometry * self.diagonal**2

    @property
    def length_tolerance(self) -> float:
        """lengths at or below this value count as zero"""
        return DEFAULT_TOLERANCES.geometry * self.diagonal
