"""
Contains the Tolerances record that holds every numeric threshold used by sumloci.
"""

from pydantic import BaseModel, ConfigDict, PositiveFloat


# pylint: disable=too-few-public-methods
class Tolerances(BaseModel):
    """
    Numeric thresholds. Floating point is never discussed by the underlying geometry, so every decision that
    compares two computed numbers goes through one of these values.

    Length-like comparisons are relative to the scale of the instance, i.e. the diagonal of the bounding box of the
    shape at hand.
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    geometry: PositiveFloat = 1e-9
    """
    Relative tolerance for incidence, convexity, degeneracy and chord length decisions (times bounding-box diagonal,
    or times its square for areas).
    """
    normalization: PositiveFloat = 1e-12
    """Allowed deviation of a²+b² from one for an oriented line, and the coincidence threshold for line points."""
    classification: PositiveFloat = 1e-9
    """Relative tolerance for equal side lengths, right angles, vanishing gradients and conic degeneracy."""
    rank: PositiveFloat = 1e-14
    """Eigenvalue ratio of a quadratic part at or below which it counts as rank one, i.e. all lines parallel."""
    reconstruction: PositiveFloat = 1e-7
    """Relative residual allowed when points of an extracted ellipse are plugged back into its quadratic form."""


DEFAULT_TOLERANCES = Tolerances()
