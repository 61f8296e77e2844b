"""Agiform construction, recognition, and the named forms M, H and the Horn form F."""

from fractions import Fraction
from typing import Sequence

from structlog import get_logger

from src.errors import (
    NonpositiveScale,
    NotAnAgiform,
    NotInAffineHull,
    PointOutsideSimplex,
    ValidationError,
)
from src.geometry import (
    barycentric_coordinates,
    contains,
    enumerate_lattice_points,
    validate_simplex,
)
from src.models.agiform import Agiform
from src.models.lattice import LatticePoint, Simplex
from src.poly import SparsePolynomial
from src.utils.rational import to_fraction

logger = get_logger(__name__)

MOTZKIN_VERTICES = ((4, 2, 0), (2, 4, 0), (0, 0, 6))
HURWITZ_VERTICES = ((6, 0, 0), (0, 6, 0), (0, 0, 6))
CENTROID = (2, 2, 2)


def make_agiform(
    s: Simplex,
    w: Sequence[int],
    scale: int | str | Fraction = 1,
) -> Agiform:
    """Agiform over U with apex w, with lambda computed exactly.

    Raises:
        PointOutsideSimplex: If w is not in U
        NonpositiveScale: If scale <= 0
    """
    factor = to_fraction(scale)
    if factor <= 0:
        raise NonpositiveScale(f"Scale must be positive, got {factor}")
    apex = tuple(int(c) for c in w)
    try:
        weights = barycentric_coordinates(s, apex)
    except NotInAffineHull as e:
        raise PointOutsideSimplex(f"Apex {apex} is not in U: {e}") from e
    if not weights.is_nonnegative():
        raise PointOutsideSimplex(f"Apex {apex} has a negative barycentric weight")
    return Agiform(simplex=s, apex=apex, weights=weights, scale=factor)


def motzkin() -> Agiform:
    """M = x^4y^2 + x^2y^4 + z^6 - 3x^2y^2z^2."""
    return make_agiform(validate_simplex(MOTZKIN_VERTICES), CENTROID, 3)


def hurwitz_h() -> Agiform:
    """H = x^6 + y^6 + z^6 - 3x^2y^2z^2."""
    return make_agiform(validate_simplex(HURWITZ_VERTICES), CENTROID, 3)


def hurwitz_family(a: Sequence[int]) -> Agiform:
    """a_1 x_1^N + ... + a_n x_n^N - N x^a with N = sum(a), over the simplex {N e_i}.

    Raises:
        OddVertex: If N is odd
    """
    exponents = tuple(int(c) for c in a)
    if any(c < 0 for c in exponents):
        raise ValidationError(f"Exponents must be non-negative: {exponents}")
    total = sum(exponents)
    n = len(exponents)
    vertices = [tuple(total * int(i == j) for j in range(n)) for i in range(n)]
    return make_agiform(validate_simplex(vertices), exponents, total)


def _variables(arity: int) -> list[SparsePolynomial]:
    return [SparsePolynomial.variable(i, arity) for i in range(arity)]


def horn_form() -> SparsePolynomial:
    """F = (sum x_j^2)^2 - 4 sum x_j^2 x_{j+1}^2, indices mod 5."""
    x = _variables(5)
    squares = [v**2 for v in x]
    total = squares[0] + squares[1] + squares[2] + squares[3] + squares[4]
    cyclic = SparsePolynomial.zero(5)
    for j in range(5):
        cyclic = cyclic + squares[j] * squares[(j + 1) % 5]
    return total**2 - 4 * cyclic


def horn_alternate() -> SparsePolynomial:
    """(x1^2 - x2^2 + x3^2 - x4^2 + x5^2)^2 + 4(x2^2 - x1^2) x5^2 + 4 x1^2 x4^2."""
    s1, s2, s3, s4, s5 = (v**2 for v in _variables(5))
    return (s1 - s2 + s3 - s4 + s5) ** 2 + 4 * (s2 - s1) * s5 + 4 * s1 * s4


def horn_restriction_identity() -> bool:
    """F(x1, x2, x3, 0, 0) == (x1^2 - x2^2 + x3^2)^2."""
    s1, s2, s3 = (v**2 for v in _variables(5)[:3])
    return horn_form().restrict({3: 0, 4: 0}) == (s1 - s2 + s3) ** 2


def circuit_simplex(p: SparsePolynomial) -> tuple[Simplex, LatticePoint]:
    """Split the support of a circuit polynomial into a simplex U and a point of U.

    Raises:
        NotAnAgiform: If the support is not n simplex vertices plus one lattice point of U
    """
    support = sorted(p.support())
    if len(support) != p.arity + 1:
        raise NotAnAgiform(
            f"Support has {len(support)} points, a circuit in {p.arity} variables has {p.arity + 1}"
        )
    for index, candidate in enumerate(support):
        others = support[:index] + support[index + 1 :]
        try:
            s = validate_simplex(others)
        except ValidationError:
            continue
        if contains(s, 1, candidate):
            return s, candidate
    raise NotAnAgiform("Support is not a simplex plus one of its lattice points")


def agiform_from_polynomial(p: SparsePolynomial) -> Agiform:
    """Recover (U, w, lambda, scale) from a polynomial in AGI proportion.

    Raises:
        NotAnAgiform: If p is not a positive multiple of an agiform
    """
    s, apex = circuit_simplex(p)
    scale = -p.coefficient(apex)
    if scale <= 0:
        raise NotAnAgiform(f"Coefficient at the apex {apex} must be negative")
    agiform = make_agiform(s, apex, scale)
    if agiform.to_polynomial() != p:
        raise NotAnAgiform("Vertex coefficients are not in AGI proportion to the apex")
    return agiform


def newton_lattice_points(p: SparsePolynomial) -> frozenset[LatticePoint]:
    """C(p) = New(p) ∩ Z^n for a circuit polynomial (New(p) is the simplex U)."""
    s, _ = circuit_simplex(p)
    return enumerate_lattice_points(s, 1)
