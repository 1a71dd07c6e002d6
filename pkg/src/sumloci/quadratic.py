"""
The sum of squared distances Q to a finite set of lines and its level sets S_k.

Q is a quadratic form whose quadratic part [[A, B/2], [B/2, C]] = Σ nᵢnᵢᵀ is positive definite unless all lines are
parallel. Hence S_k is an ellipse around the unique minimizer for every k above the minimal sum, the minimizer itself
at the minimal sum, and empty below it. For the sides of a triangle this always holds; the ellipses for different k
share center and axes (they are homothetic), and they are circles exactly for equilateral triangles.

Minimization solves the stationarity system directly; axes and rotation come from the closed-form eigen
decomposition of the symmetric 2x2 quadratic part.
"""

import logging
import math
from typing import Sequence

import numpy as np

from .bo.triangle import Triangle
from .com.degeneratenonelliptic import DegenerateNonElliptic
from .com.degeneratepoint import DegeneratePoint
from .com.ellipse import Ellipse
from .com.ellipsegeometry import EllipseGeometry
from .com.empty import Empty
from .com.lineofminima import LineOfMinima
from .com.orientedline import OrientedLine
from .com.point import Point
from .com.quadraticform import QuadraticForm
from .com.squaredminimum import SquaredMinimum
from .com.uniquepoint import UniquePoint
from .com.variants import SquaredLocus
from .enum.degeneracykind import DegeneracyKind
from .errors import EmptyLineSet, NotAnEllipse
from .geometry import sides_of
from .tolerances import DEFAULT_TOLERANCES

_logger = logging.getLogger(__name__)

_RECONSTRUCTION_SAMPLES = 16


def squared_sum_form(lines: Sequence[OrientedLine]) -> QuadraticForm:
    """
    Q(x, y) = Σ (aᵢ·x + bᵢ·y + cᵢ)², expanded into its six coefficients. Raises EmptyLineSet for no lines.
    """
    if not lines:
        raise EmptyLineSet("the sum of squared distances needs at least one line")
    return QuadraticForm(
        A=sum(line.a * line.a for line in lines),
        B=2.0 * sum(line.a * line.b for line in lines) + 0.0,
        C=sum(line.b * line.b for line in lines),
        D=2.0 * sum(line.a * line.c for line in lines) + 0.0,
        E=2.0 * sum(line.b * line.c for line in lines) + 0.0,
        F0=sum(line.c * line.c for line in lines),
    )


def discriminant(q: QuadraticForm) -> float:
    """
    B² - 4AC; negative exactly when the level sets are ellipses.
    """
    return q.B * q.B - 4.0 * q.A * q.C


def _eigenvalues(form: QuadraticForm) -> tuple[float, float]:
    """larger and smaller eigenvalue of [[A, B/2], [B/2, C]]"""
    half_trace = 0.5 * form.trace
    radius = 0.5 * math.hypot(form.A - form.C, form.B)
    if 2.0 * radius <= DEFAULT_TOLERANCES.classification * form.trace:
        return half_trace, half_trace
    larger = half_trace + radius
    # the determinant -disc/4 keeps its relative accuracy for nearly parallel lines, half_trace - radius does not
    return larger, max(-0.25 * discriminant(form), 0.0) / larger


def _is_definite(form: QuadraticForm) -> bool:
    larger, smaller = _eigenvalues(form)
    return smaller > DEFAULT_TOLERANCES.rank * larger


def _major_eigenvector_angle(form: QuadraticForm) -> float:
    """angle of the eigenvector belonging to the larger eigenvalue"""
    return 0.5 * math.atan2(form.B, form.A - form.C)


def _minimize(form: QuadraticForm) -> SquaredMinimum:
    if _is_definite(form):
        hessian = np.array([[2.0 * form.A, form.B], [form.B, 2.0 * form.C]])
        x, y = np.linalg.solve(hessian, np.array([-form.D, -form.E]))
        k_min = float(form.evaluate(float(x), float(y)))
        return SquaredMinimum(k_min=max(k_min, 0.0), argmin=UniquePoint(point=Point(x=float(x), y=float(y))))
    # rank one: [[A, B/2], [B/2, C]] = λ·u·uᵀ, so Q = λ·t² + 2·s·t + F0 with t = u·(x, y)
    eigenvalue = form.trace
    u_x = math.sqrt(max(form.A, 0.0) / eigenvalue)
    u_y = math.copysign(math.sqrt(max(form.C, 0.0) / eigenvalue), form.B if u_x > 0 else 1.0)
    s = 0.5 * (form.D * u_x + form.E * u_y)
    t_min = -s / eigenvalue
    k_min = form.F0 - s * s / eigenvalue
    _logger.debug("Quadratic part has rank one, minima on t = %s", t_min)
    return SquaredMinimum(
        k_min=max(k_min, 0.0),
        argmin=LineOfMinima(line=OrientedLine.from_coefficients(u_x, u_y, -t_min)),
    )


def min_squared_sum(lines: Sequence[OrientedLine]) -> SquaredMinimum:
    """
    Minimal sum of squared distances and where it is attained: a unique point unless all lines are parallel, in
    which case every point of a line parallel to them is a minimizer. A single line has minimum 0 on itself.
    """
    return _minimize(squared_sum_form(lines))


def _all_parallel(lines: Sequence[OrientedLine]) -> bool:
    first = lines[0]
    return all(abs(line.a * first.b - line.b * first.a) <= DEFAULT_TOLERANCES.classification for line in lines)


def _ellipse(form: QuadraticForm, center: Point, k_min: float, k: float) -> EllipseGeometry:
    excess = k - k_min
    larger, smaller = _eigenvalues(form)
    if larger == smaller:
        rotation = 0.0
    else:
        rotation = (_major_eigenvector_angle(form) + 0.5 * math.pi) % math.pi
        # a horizontal major axis is reported as 0, never as a value just below pi
        if math.pi - rotation <= DEFAULT_TOLERANCES.classification:
            rotation = 0.0
    geometry = EllipseGeometry(
        center=center,
        semi_major=math.sqrt(excess / smaller),
        semi_minor=math.sqrt(excess / larger),
        rotation=rotation,
    )
    samples = geometry.points(_RECONSTRUCTION_SAMPLES)
    residual = float(np.max(np.abs(form.evaluate(samples[:, 0], samples[:, 1]) - k)))
    if residual > DEFAULT_TOLERANCES.reconstruction * max(k, 1.0):
        _logger.warning("Ellipse %s reproduces Q = %s only up to %s", geometry, k, residual)
    return geometry


def classify_squared_locus(lines: Sequence[OrientedLine], k: float) -> SquaredLocus:
    """
    S_k: the points of the plane whose sum of squared distances to the lines equals k.

    With m = k - k_min: empty for m < 0, the minimizer for m = 0 (relative to max(1, k_min)), an ellipse for m > 0
    unless all lines are parallel; parallel pencils give the line of minima or two lines parallel to it.
    """
    form = squared_sum_form(lines)
    minimum = _minimize(form)
    excess = k - minimum.k_min
    tolerance = DEFAULT_TOLERANCES.classification * max(1.0, minimum.k_min)
    if excess < -tolerance:
        return Empty()
    if isinstance(minimum.argmin, UniquePoint):
        if excess <= tolerance:
            return DegeneratePoint(point=minimum.argmin.point)
        return Ellipse(geometry=_ellipse(form, minimum.argmin.point, minimum.k_min, k))
    kind = DegeneracyKind.PARALLEL_PENCIL if _all_parallel(lines) else DegeneracyKind.OTHER
    line_of_minima = minimum.argmin.line
    if excess <= tolerance:
        return DegenerateNonElliptic(kind=kind, lines=[line_of_minima])
    offset = math.sqrt(excess / form.trace)
    return DegenerateNonElliptic(
        kind=kind,
        lines=[
            line_of_minima.model_copy(update={"c": line_of_minima.c + offset}),
            line_of_minima.model_copy(update={"c": line_of_minima.c - offset}),
        ],
    )


def ellipse_geometry(lines: Sequence[OrientedLine], k: float) -> EllipseGeometry:
    """
    Center, semi-axes and rotation of S_k. Raises NotAnEllipse unless S_k is a non-degenerate ellipse.
    """
    locus = classify_squared_locus(lines, k)
    if not isinstance(locus, Ellipse):
        raise NotAnEllipse(f"S_{k} is {locus.typ.value}, not an ellipse")
    return locus.geometry


def is_circle_locus(t: Triangle) -> bool:
    """
    Whether the squared-distance loci of the triangle are circles, i.e. A = C and B = 0. This is the case exactly
    for equilateral triangles.
    """
    form = squared_sum_form(sides_of(t))
    tolerance = DEFAULT_TOLERANCES.classification * form.trace
    return abs(form.A - form.C) <= tolerance and abs(form.B) <= tolerance


def axis_placed_triangle(a: float, b: float, c: float) -> Triangle:
    """
    The triangle A(0, a), B(-b, 0), C(c, 0) with its vertices on the coordinate axes.
    """
    return Triangle.from_coordinates([(0.0, a), (-b, 0.0), (c, 0.0)])


def axis_placed_quadratic_part(a: float, b: float, c: float) -> tuple[float, float, float]:
    """
    Closed form of (A, B, C) for the triangle A(0, a), B(-b, 0), C(c, 0):
    A = a²/p + a²/q, B = 2ac/p - 2ab/q, C = c²/p + b²/q + 1 with p = a² + c², q = a² + b².
    """
    p = a * a + c * c
    q = a * a + b * b
    return a * a / p + a * a / q, 2 * a * c / p - 2 * a * b / q, c * c / p + b * b / q + 1


def axis_placed_discriminant(a: float, b: float, c: float) -> float:
    """
    Closed form of the discriminant for the triangle A(0, a), B(-b, 0), C(c, 0): -4·a²/(pq)·(b² + 2bc + c² + p + q).
    """
    p = a * a + c * c
    q = a * a + b * b
    return -4 * a * a / (p * q) * (b * b + 2 * b * c + c * c + p + q)


def isosceles_minimum(a: float, b: float) -> SquaredMinimum:
    """
    Closed form of the minimum for the isosceles triangle A(0, a), B(-b, 0), C(b, 0): 2a²b²/(a² + 3b²), attained at
    (0, 2ab²/(a² + 3b²)). For a = √3·b (equilateral) this is b² at the incenter.
    """
    denominator = a * a + 3 * b * b
    return SquaredMinimum(
        k_min=2 * a * a * b * b / denominator,
        argmin=UniquePoint(point=Point(x=0.0, y=2 * a * b * b / denominator)),
    )
