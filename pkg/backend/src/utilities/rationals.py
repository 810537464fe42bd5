"""
Text conversions for exact rationals.

Rationals travel through files and terminals as strings ``"p/q"`` (or ``"p"`` when the
denominator is one) so no precision-bearing numeric type ever enters the formats.
"""

import re
from fractions import Fraction
from typing import Union

import sympy

from src.utilities.constants import ErrorMessages

_RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(value: Union[str, int]) -> Fraction:
    """
    Parse an integer or a ``"p/q"`` string into a Fraction.

    Args:
        value (Union[str, int]): The integer or text to parse.

    Returns:
        Fraction: The exact value.

    Raises:
        ValueError: If the text is not an integer or an integer ratio with a nonzero denominator.
    """
    if isinstance(value, bool):
        raise ValueError(ErrorMessages.INVALID_RATIONAL.value.format(text=value))
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL_PATTERN.match(value):
        raise ValueError(ErrorMessages.INVALID_RATIONAL.value.format(text=value))
    try:
        return Fraction(value.replace(" ", ""))
    except ZeroDivisionError as e:
        raise ValueError(ErrorMessages.INVALID_RATIONAL.value.format(text=value)) from e


def format_rational(value: Fraction) -> str:
    """
    Render a Fraction as ``"p/q"``, or ``"p"`` for integers.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_decimal(value: Fraction, digits: int) -> str:
    """
    Render a Fraction with ``digits`` significant decimal digits.

    Args:
        value (Fraction): The exact value.
        digits (int): Number of significant digits, at least 1.

    Returns:
        str: The decimal rendering computed by sympy's arbitrary precision evaluation.
    """
    value = Fraction(value)
    return str(sympy.Rational(value.numerator, value.denominator).evalf(max(digits, 1)))
