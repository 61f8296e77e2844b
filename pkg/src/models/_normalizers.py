"""Shared pre-validators for Pydantic model fields."""

from src.errors import DocumentError, RaggedInput


def _coerce_point(value):
    """Normalize a JSON integer array into a tuple of ints.

    Booleans and floats are refused even when integral; ``2.0`` in an
    exponent vector is almost always a serialization slip upstream.
    """
    if not isinstance(value, (list, tuple)):
        raise DocumentError(f"Expected an integer array, got {value!r}")
    for c in value:
        if isinstance(c, bool) or not isinstance(c, int):
            raise DocumentError(f"Expected integer coordinates, got {c!r}")
    return tuple(value)


def _coerce_points(value):
    """Normalize a list of integer arrays, rejecting mixed lengths."""
    if not isinstance(value, (list, tuple)):
        raise DocumentError(f"Expected a list of integer arrays, got {value!r}")
    points = tuple(_coerce_point(v) for v in value)
    if len({len(p) for p in points}) > 1:
        raise RaggedInput(f"Points have unequal lengths: {sorted({len(p) for p in points})}")
    return points
