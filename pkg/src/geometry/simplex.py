"""Simplex validation, barycentric coordinates and membership in kU.

All predicates are exact. The vertex matrix V (columns u_i) is inverted once
per simplex in fraction-free form, so membership tests reduce to integer
dot products and sign checks.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from structlog import get_logger

from src.errors import (
    AffinelyDependent,
    DimensionMismatch,
    DuplicateVertex,
    NegativeVertex,
    NotInAffineHull,
    OddVertex,
    PointOutsideSimplex,
    RaggedInput,
    TooFewVertices,
    UnequalDegreeSums,
)
from src.models.dilation import ScaledBarycentric
from src.models.lattice import BarycentricCoords, LatticePoint, Simplex
from src.utils.linear_algebra import inverse_fraction_free, transpose
from src.utils.rational import floor_frac

logger = get_logger(__name__)


def validate_simplex(vertices: Sequence[Sequence[int]]) -> Simplex:
    """Validate vertices u_1..u_n and build a Simplex.

    Checks, in order: at least two points, equal lengths, one vertex per
    coordinate, non-negative and even coordinates, no duplicates, equal
    coordinate sums, affine independence (exact inverse).

    Raises:
        TooFewVertices, RaggedInput, DimensionMismatch, NegativeVertex,
        OddVertex, DuplicateVertex, UnequalDegreeSums, AffinelyDependent
    """
    points = [tuple(int(c) for c in v) for v in vertices]
    if len(points) < 2:
        raise TooFewVertices(f"A simplex needs at least 2 vertices, got {len(points)}")

    lengths = {len(p) for p in points}
    if len(lengths) != 1:
        raise RaggedInput(f"Vertices have unequal lengths: {sorted(lengths)}")
    (dimension,) = lengths
    if dimension != len(points):
        raise DimensionMismatch(
            f"Expected {dimension} vertices in dimension {dimension}, got {len(points)}"
        )

    for p in points:
        if any(c < 0 for c in p):
            raise NegativeVertex(f"Vertex {p} has a negative coordinate")
        if any(c % 2 for c in p):
            raise OddVertex(f"Vertex {p} has an odd coordinate")

    seen: set[LatticePoint] = set()
    for p in points:
        if p in seen:
            raise DuplicateVertex(f"Vertex {p} is repeated")
        seen.add(p)

    sums = {sum(p) for p in points}
    if len(sums) != 1:
        raise UnequalDegreeSums(f"Vertex coordinate sums differ: {sorted(sums)}")
    (degree_sum,) = sums

    # On the hyperplane sum = 2d > 0, affine and linear independence coincide
    if _inverse(tuple(points)) is None:
        raise AffinelyDependent(f"Vertices {points} are affinely dependent")

    simplex = Simplex(vertices=tuple(points), degree_sum=degree_sum)
    logger.debug("Validated simplex", n=simplex.n, degree_sum=degree_sum)
    return simplex


@lru_cache(maxsize=4096)
def _inverse(
    vertices: tuple[LatticePoint, ...],
) -> tuple[tuple[tuple[int, ...], ...], int] | None:
    """Fraction-free inverse of the matrix whose columns are the vertices."""
    return inverse_fraction_free(transpose(vertices))


def _weight_numerators(s: Simplex, p: LatticePoint) -> tuple[tuple[int, ...], int]:
    """Integers (m_i, D) with p = sum (m_i / D) u_i."""
    inverse = _inverse(s.vertices)
    if inverse is None:
        raise AffinelyDependent(f"Vertices {s.vertices} are affinely dependent")
    numerators, denominator = inverse
    return tuple(sum(a * b for a, b in zip(row, p)) for row in numerators), denominator


def _check_length(s: Simplex, p: Sequence[int]) -> LatticePoint:
    point = tuple(p)
    if len(point) != s.n:
        raise RaggedInput(f"Point {point} has length {len(point)}, expected {s.n}")
    return point


def barycentric_coordinates(s: Simplex, p: Sequence[int]) -> BarycentricCoords:
    """Exact lambda with p = sum(lambda_i u_i) and sum(lambda_i) = 1.

    Weights may be negative; membership is a separate check.

    Raises:
        NotInAffineHull: If the coordinate sum of p differs from 2d
    """
    point = _check_length(s, p)
    # V is invertible, so the system is consistent iff sum(lambda) = sum(p)/2d is 1
    if sum(point) != s.degree_sum:
        raise NotInAffineHull(
            f"Point {point} has coordinate sum {sum(point)}, expected {s.degree_sum}"
        )
    numerators, denominator = _weight_numerators(s, point)
    return BarycentricCoords(weights=tuple(Fraction(m, denominator) for m in numerators))


def contains(s: Simplex, k: int, p: Sequence[int]) -> bool:
    """True iff p lies in kU (exact)."""
    point = tuple(p)
    if len(point) != s.n or sum(point) != k * s.degree_sum:
        return False
    numerators, _ = _weight_numerators(s, point)
    return all(m >= 0 for m in numerators)


def is_interior(s: Simplex, k: int, p: Sequence[int]) -> bool:
    """True iff p lies strictly inside kU (all weights positive)."""
    point = tuple(p)
    if len(point) != s.n or sum(point) != k * s.degree_sum:
        return False
    numerators, _ = _weight_numerators(s, point)
    return all(m > 0 for m in numerators)


def is_vertex(s: Simplex, k: int, p: Sequence[int]) -> bool:
    """True iff p equals k*u_i for some vertex u_i."""
    point = tuple(p)
    return any(point == tuple(k * c for c in u) for u in s.vertices)


def scaled_barycentric(s: Simplex, k: int, w: Sequence[int]) -> ScaledBarycentric:
    """beta with w = sum(beta_i u_i), sum(beta_i) = k, and the split of 2*beta.

    Raises:
        PointOutsideSimplex: If w is not in kU
    """
    point = _check_length(s, w)
    if not contains(s, k, point):
        raise PointOutsideSimplex(f"Point {point} is not in {k}U")
    numerators, denominator = _weight_numerators(s, point)
    beta = tuple(Fraction(m, denominator) for m in numerators)
    splits = [floor_frac(2 * b) for b in beta]
    return ScaledBarycentric(
        beta=beta,
        floors=tuple(f for f, _ in splits),
        fracs=tuple(r for _, r in splits),
    )


def bead_coefficients(s: Simplex, k: int, w: Sequence[int]) -> tuple[int, ...] | None:
    """The composition a of k with w = sum(a_i u_i), or None if w is not a bead."""
    point = tuple(w)
    if not contains(s, k, point):
        return None
    numerators, denominator = _weight_numerators(s, point)
    if any(m % denominator for m in numerators):
        return None
    return tuple(m // denominator for m in numerators)


def combine(s: Simplex, coefficients: Sequence[int | Fraction]) -> LatticePoint:
    """sum(c_i u_i) as an integer point.

    Raises:
        ValueError: If the combination is not integral
    """
    total = [Fraction(0)] * s.n
    for c, u in zip(coefficients, s.vertices):
        if c:
            for j, x in enumerate(u):
                total[j] += c * x
    if any(t.denominator != 1 for t in total):
        raise ValueError(f"Combination {list(coefficients)} is not integral")
    return tuple(int(t) for t in total)
