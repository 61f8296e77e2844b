"""Exact lattice geometry of simplices: validation, membership, enumeration."""

from src.geometry.enumeration import (
    beads,
    compositions,
    enumerate_lattice_points,
    even_points,
    is_even,
)
from src.geometry.simplex import (
    barycentric_coordinates,
    bead_coefficients,
    combine,
    contains,
    is_interior,
    is_vertex,
    scaled_barycentric,
    validate_simplex,
)

__all__ = [
    "barycentric_coordinates",
    "bead_coefficients",
    "beads",
    "combine",
    "compositions",
    "contains",
    "enumerate_lattice_points",
    "even_points",
    "is_even",
    "is_interior",
    "is_vertex",
    "scaled_barycentric",
    "validate_simplex",
]
