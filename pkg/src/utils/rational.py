"""Helpers around ``fractions.Fraction`` for exact rational arithmetic."""

import math
from fractions import Fraction
from typing import Iterable

from src.errors import DocumentError


def to_fraction(value: int | str | Fraction) -> Fraction:
    """Parse an int, a ``Fraction`` or a ``"p/q"`` string into a ``Fraction``.

    Floats are rejected: they would smuggle rounding into exact predicates.

    Raises:
        DocumentError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise DocumentError(f"Not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise DocumentError(f"Not a rational string: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise DocumentError(f"Not a rational string: {value!r}") from e
    raise DocumentError(f"Not a rational: {value!r}")


def format_fraction(value: Fraction | int) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def floor_frac(value: Fraction) -> tuple[int, Fraction]:
    """Split ``value`` as ``floor + frac`` with ``0 <= frac < 1``."""
    floor = math.floor(value)
    return floor, value - floor


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators of ``values`` (1 if empty)."""
    result = 1
    for value in values:
        result = math.lcm(result, Fraction(value).denominator)
    return result
