"""
Contains InverseParameters class
"""

from pydantic import PositiveFloat

from .com import COM

# pylint: disable=too-few-public-methods


class InverseParameters(COM):
    """
    Parameters of the isosceles triangle A(0, a), B(-b, 0), C(b, 0) and of the downward shift l that moves the center
    of its squared-distance ellipses into the origin.
    """

    a: PositiveFloat
    """height of the apex above the base, a = β/√2"""
    b: PositiveFloat
    """half the base, b = √((α² - β²/2)/3)"""
    l: PositiveFloat
    """shift, l = 2ab²/(a² + 3b²)"""
