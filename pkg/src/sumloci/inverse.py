"""
The inverse problem: given an ellipse, find a triangle and a constant k whose squared-distance locus S_k is exactly
that ellipse.

For the isosceles triangle A(0, a), B(-b, 0), C(b, 0) the loci are ellipses centered at (0, l) with l = 2ab²/(a² + 3b²)
and squared semi-axes proportional to a² + 3b² and 2a². Shifting the triangle down by l and solving for a and b gives
a triangle for every canonical ellipse x²/α² + y²/β² = 1 with α ≥ β > 0.
"""

import logging
import math

from .bo.triangle import Triangle
from .com.ellipsegeometry import EllipseGeometry
from .com.inverseparameters import InverseParameters
from .com.inverseresult import InverseResult
from .com.rigidmotion import RigidMotion
from .errors import InvalidAxes
from .geometry import sides_of
from .quadratic import ellipse_geometry

_logger = logging.getLogger(__name__)


def _check_axes(alpha: float, beta: float) -> None:
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise InvalidAxes(f"semi-axes must be finite, got alpha={alpha}, beta={beta}")
    if beta <= 0:
        raise InvalidAxes(f"beta must be positive, got {beta}")
    if beta > alpha:
        raise InvalidAxes(f"alpha must not be smaller than beta, got alpha={alpha}, beta={beta}")


def canonical_rhs(a: float, b: float, k: float) -> float:
    """
    Right-hand side of the canonical equation x²/(...) + y²/(...) = rhs of S_k for the shifted isosceles triangle,
    ((a² + b²)k - 2a²b²)/(2a²(a² + 3b²)) + 2b⁴/(a² + 3b²)².

    It is 1 exactly for the k returned by :func:`triangle_from_ellipse` and 0 exactly at the minimal sum
    2a²b²/(a² + 3b²).
    """
    a_2 = a * a
    b_2 = b * b
    denominator = a_2 + 3 * b_2
    return ((a_2 + b_2) * k - 2 * a_2 * b_2) / (2 * a_2 * denominator) + 2 * b_2 * b_2 / denominator**2


def triangle_from_ellipse(alpha: float, beta: float) -> InverseResult:
    """
    The isosceles triangle A'(0, a - l), B'(-b, -l), C'(b, -l) and the constant k for which S_k is the ellipse
    x²/α² + y²/β² = 1. Of the two mirror-image solutions the one with the apex up is returned.

    Raises InvalidAxes unless α ≥ β > 0. For α = β (a circle) the triangle is equilateral.
    """
    _check_axes(alpha, beta)
    a_2 = beta * beta / 2
    b_2 = (alpha * alpha - a_2) / 3
    a = math.sqrt(a_2)
    b = math.sqrt(b_2)
    shift = 2 * a * b_2 / (a_2 + 3 * b_2)
    k = 2 * a_2 * (a_2 * a_2 + 7 * a_2 * b_2 + 10 * b_2 * b_2) / ((a_2 + b_2) * (a_2 + 3 * b_2))
    triangle = Triangle.from_coordinates([(0.0, a - shift), (-b, -shift), (b, -shift)])
    _logger.debug("Ellipse with axes %s, %s realized by a=%s, b=%s, l=%s, k=%s", alpha, beta, a, b, shift, k)
    return InverseResult(triangle=triangle, k=k, params=InverseParameters(a=a, b=b, l=shift))


def triangle_for_ellipse(geometry: EllipseGeometry) -> InverseResult:
    """
    Like :func:`triangle_from_ellipse` for an ellipse in general position: the canonical construction is rotated by
    the ellipse's rotation and moved to its center. Distances are invariant under the motion, so k stays the same.
    """
    canonical = triangle_from_ellipse(geometry.semi_major, geometry.semi_minor)
    motion = RigidMotion(rotation=geometry.rotation, dx=geometry.center.x, dy=geometry.center.y)
    return canonical.model_copy(update={"triangle": motion.apply_triangle(canonical.triangle)})


def reconstruction_residual(result: InverseResult, alpha: float, beta: float) -> float:
    """
    max(|α' - α|, |β' - β|) for the semi-axes α', β' of the locus S_k recovered from the constructed triangle.
    """
    recovered = ellipse_geometry(sides_of(result.triangle), result.k)
    return max(abs(recovered.semi_major - alpha), abs(recovered.semi_minor - beta))
