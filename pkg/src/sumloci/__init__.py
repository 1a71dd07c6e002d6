"""
sumloci - loci of constant distance sums and squared distance sums

sumloci computes, for a triangle, a convex polygon or a finite set of lines, the points whose distances to the sides
add up to a given value (segments inside the polygon, following Viviani's theorem on equilateral triangles) and the
points whose squared distances add up to a given value (ellipses around a unique minimizer). It also solves the
inverse problem of finding a triangle for a prescribed ellipse.

The version can be queried using `sumloci.__version__`.
"""

__all__ = [
    "ConvexPolygon",
    "Shape",
    "Triangle",
    "COM",
    "DegenerateNonElliptic",
    "DegeneratePoint",
    "Direction",
    "Ellipse",
    "EllipseGeometry",
    "Empty",
    "GridSpec",
    "InverseParameters",
    "InverseResult",
    "IsotropicConstant",
    "KRange",
    "LinearForm",
    "LineOfMinima",
    "OrientedLine",
    "Point",
    "PointHit",
    "QuadraticForm",
    "RigidMotion",
    "Segment",
    "SquaredMinimum",
    "TriangleClass",
    "UniquePoint",
    "Vertex",
    "WholePolygon",
    "Argmin",
    "ClipResult",
    "LevelDirection",
    "SquaredLocus",
    "SumLocus",
    "DegeneracyKind",
    "TriangleKind",
    "Typ",
    "AmbiguousOrientation",
    "CollinearProbe",
    "DegenerateLine",
    "DegenerateShape",
    "EmptyLineSet",
    "GeometryError",
    "InvalidAxes",
    "NotAnEllipse",
    "NotConvex",
    "OutsideDomain",
    "SceneError",
    "DEFAULT_TOLERANCES",
    "Tolerances",
    "altitudes",
    "classify_triangle",
    "clip_line_to_polygon",
    "line_through",
    "make_oriented_line",
    "point_in_polygon",
    "side_lengths",
    "sides_of",
    "signed_eval",
    "triangle_area",
    "distance_sum_form",
    "is_viviani",
    "k_range",
    "level_direction",
    "level_segments",
    "sum_locus",
    "three_point_test",
    "axis_placed_discriminant",
    "axis_placed_quadratic_part",
    "axis_placed_triangle",
    "classify_squared_locus",
    "discriminant",
    "ellipse_geometry",
    "is_circle_locus",
    "isosceles_minimum",
    "min_squared_sum",
    "squared_sum_form",
    "canonical_rhs",
    "reconstruction_residual",
    "triangle_for_ellipse",
    "triangle_from_ellipse",
    "distance_sum_objective",
    "grid_level_points",
    "grid_min",
    "point_line_distance",
    "squared_sum_objective",
    "__version__",
]

# Import shapes
from .bo.convexpolygon import ConvexPolygon
from .bo.shape import Shape
from .bo.triangle import Triangle

# Import components
from .com.com import COM
from .com.degeneratenonelliptic import DegenerateNonElliptic
from .com.degeneratepoint import DegeneratePoint
from .com.direction import Direction
from .com.ellipse import Ellipse
from .com.ellipsegeometry import EllipseGeometry
from .com.empty import Empty
from .com.gridspec import GridSpec
from .com.inverseparameters import InverseParameters
from .com.inverseresult import InverseResult
from .com.isotropicconstant import IsotropicConstant
from .com.krange import KRange
from .com.linearform import LinearForm
from .com.lineofminima import LineOfMinima
from .com.orientedline import OrientedLine
from .com.point import Point
from .com.pointhit import PointHit
from .com.quadraticform import QuadraticForm
from .com.rigidmotion import RigidMotion
from .com.segment import Segment
from .com.squaredminimum import SquaredMinimum
from .com.triangleclass import TriangleClass
from .com.uniquepoint import UniquePoint
from .com.variants import Argmin, ClipResult, LevelDirection, SquaredLocus, SumLocus
from .com.vertex import Vertex
from .com.wholepolygon import WholePolygon

# Import Enums
from .enum.degeneracykind import DegeneracyKind
from .enum.trianglekind import TriangleKind
from .enum.typ import Typ

# Import errors and settings
from .errors import (
    AmbiguousOrientation,
    CollinearProbe,
    DegenerateLine,
    DegenerateShape,
    EmptyLineSet,
    GeometryError,
    InvalidAxes,
    NotAnEllipse,
    NotConvex,
    OutsideDomain,
    SceneError,
)

# Import operations
from .geometry import (
    altitudes,
    classify_triangle,
    clip_line_to_polygon,
    line_through,
    make_oriented_line,
    point_in_polygon,
    side_lengths,
    sides_of,
    signed_eval,
    triangle_area,
)
from .inverse import canonical_rhs, reconstruction_residual, triangle_for_ellipse, triangle_from_ellipse
from .linear import (
    distance_sum_form,
    is_viviani,
    k_range,
    level_direction,
    level_segments,
    sum_locus,
    three_point_test,
)
from .oracle import distance_sum_objective, grid_level_points, grid_min, point_line_distance, squared_sum_objective
from .quadratic import (
    axis_placed_discriminant,
    axis_placed_quadratic_part,
    axis_placed_triangle,
    classify_squared_locus,
    discriminant,
    ellipse_geometry,
    is_circle_locus,
    isosceles_minimum,
    min_squared_sum,
    squared_sum_form,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .version import __version__
