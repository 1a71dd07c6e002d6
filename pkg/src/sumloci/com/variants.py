"""
Contains the unions of the result variants. Each member carries its own literal `_typ`.
"""

from typing import Union

from .degeneratenonelliptic import DegenerateNonElliptic
from .degeneratepoint import DegeneratePoint
from .direction import Direction
from .ellipse import Ellipse
from .empty import Empty
from .isotropicconstant import IsotropicConstant
from .lineofminima import LineOfMinima
from .pointhit import PointHit
from .segment import Segment
from .uniquepoint import UniquePoint
from .vertex import Vertex
from .wholepolygon import WholePolygon

ClipResult = Union[Empty, PointHit, Segment]
"""intersection of a line with a closed convex polygon"""

SumLocus = Union[Empty, Vertex, Segment, WholePolygon]
"""T_k: the points of a polygon whose distance sum equals k"""

LevelDirection = Union[Direction, IsotropicConstant]
"""direction of the level lines of the distance sum function"""

Argmin = Union[UniquePoint, LineOfMinima]
"""where the sum of squared distances is minimal"""

SquaredLocus = Union[Empty, DegeneratePoint, Ellipse, DegenerateNonElliptic]
"""S_k: the points of the plane whose sum of squared distances equals k"""
