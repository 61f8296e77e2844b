"""SOS decision and binomial-square decompositions of agiforms.

Candidate squares are (x^(z1/2) - x^(z2/2))^2 for distinct even points
z1 < z2 of the maximal mediated set; nonnegative multipliers matching the
agiform's coefficients come from an exact phase-1 simplex solve. Every
decomposition is re-expanded and compared with the source polynomial.
"""

from fractions import Fraction
from itertools import combinations

from structlog import get_logger

from src.agiform.forms import make_agiform
from src.config import settings
from src.dilation import minimum_dilation
from src.errors import DecompositionFailed, InternalInvariantViolation, KTooSmall, NotSos
from src.geometry import is_even
from src.mediated import sos_membership
from src.models.agiform import Agiform, BinomialSquareDecomposition, SquareTerm
from src.models.lattice import LatticePoint
from src.models.mediated import SosMembership
from src.utils.exact_lp import find_nonnegative_solution

logger = get_logger(__name__)


def is_sos(a: Agiform, max_box_points: int | None = None) -> SosMembership:
    """Sos iff the apex lies in a U-mediated set; the positive scale is irrelevant."""
    return sos_membership(a.simplex, a.apex, max_box_points=max_box_points)


def _half(point: LatticePoint) -> LatticePoint:
    return tuple(c // 2 for c in point)


def decompose(
    a: Agiform,
    max_box_points: int | None = None,
    max_pivots: int | None = None,
) -> BinomialSquareDecomposition:
    """Write an sos agiform as a nonnegative sum of binomial squares.

    Square exponents lie in half the even points of the maximal mediated set.

    Raises:
        NotSos: If the agiform is not sos
        DecompositionFailed: If the solver finds no nonnegative combination
    """
    target = a.to_polynomial()
    if target.is_zero():
        return BinomialSquareDecomposition(arity=a.n)

    membership = is_sos(a, max_box_points=max_box_points)
    if not membership.is_sos:
        raise NotSos(f"Apex {a.apex} is not in any U-mediated set")

    evens = sorted(p for p in membership.maximal_set if is_even(p))
    pairs = list(combinations(evens, 2))
    rows: dict[LatticePoint, int] = {p: i for i, p in enumerate(sorted(membership.maximal_set))}
    for z1, z2 in pairs:
        midpoint = tuple((x + y) // 2 for x, y in zip(z1, z2))
        rows.setdefault(midpoint, len(rows))
    missing = [e for e in target.support() if e not in rows]
    if missing:
        raise DecompositionFailed(f"Support points {sorted(missing)} outside the mediated set")

    # column j: (x^(z1/2) - x^(z2/2))^2 = x^z1 + x^z2 - 2 x^((z1+z2)/2)
    matrix = [[Fraction(0)] * len(pairs) for _ in rows]
    for j, (z1, z2) in enumerate(pairs):
        midpoint = tuple((x + y) // 2 for x, y in zip(z1, z2))
        matrix[rows[z1]][j] += 1
        matrix[rows[z2]][j] += 1
        matrix[rows[midpoint]][j] -= 2
    rhs = [Fraction(0)] * len(rows)
    for exponent, coeff in target.terms.items():
        rhs[rows[exponent]] = coeff

    solution = find_nonnegative_solution(
        matrix,
        rhs,
        max_pivots=max_pivots or settings.decomposition.max_pivots,
    )
    if solution is None:
        logger.error(
            "No binomial-square combination found for an sos agiform",
            apex=a.apex,
            vertices=a.simplex.vertices,
        )
        raise DecompositionFailed(f"No nonnegative binomial-square combination for apex {a.apex}")

    terms = tuple(
        SquareTerm(coefficient=c, plus=_half(z1), minus=_half(z2))
        for c, (z1, z2) in zip(solution, pairs)
        if c > 0
    )
    decomposition = BinomialSquareDecomposition(arity=a.n, terms=terms)
    if not decomposition.verify(target):
        raise DecompositionFailed("Binomial squares do not re-expand to the agiform")

    logger.info(
        "Decomposed agiform",
        apex=a.apex,
        candidates=len(pairs),
        squares=len(terms),
    )
    return decomposition


def blowup_decompose(
    a: Agiform,
    k: int,
    max_box_points: int | None = None,
    max_pivots: int | None = None,
) -> BinomialSquareDecomposition:
    """Sum of binomial squares in the formal variables y_i = x_i^(1/k).

    q(x) = p(x_1^k, ..., x_n^k) is the agiform over kU with apex kw; its
    decomposition, read in y, reproduces p after y_i^k -> x_i.

    Raises:
        KTooSmall: If k < max{2, n-2}
    """
    minimum = minimum_dilation(a.n)
    if k < minimum:
        raise KTooSmall(
            f"k={k} is below max{{2, n-2}}={minimum}", k=k, minimum=minimum
        )
    p = a.to_polynomial()
    dilated = make_agiform(a.simplex.dilate(k), tuple(k * c for c in a.apex), a.scale)
    if dilated.to_polynomial() != p.substitute_power(k):
        raise InternalInvariantViolation("Dilated agiform differs from p(x^k)")

    decomposition = decompose(dilated, max_box_points=max_box_points, max_pivots=max_pivots)
    decomposition = decomposition.model_copy(update={"root_degree": k})
    if not decomposition.verify(p):
        raise DecompositionFailed(f"Blow-up decomposition with k={k} does not reproduce p")
    return decomposition


def hurwitz_explicit_decomposition() -> BinomialSquareDecomposition:
    """Explicit squares for H:

        3/2(x^2y - yz^2)^2 + (x^3 - xy^2)^2 + 1/2(x^2y - y^3)^2
        + (z^3 - y^2z)^2 + 1/2(yz^2 - y^3)^2
    """
    terms = (
        (Fraction(3, 2), (2, 1, 0), (0, 1, 2)),
        (Fraction(1), (3, 0, 0), (1, 2, 0)),
        (Fraction(1, 2), (2, 1, 0), (0, 3, 0)),
        (Fraction(1), (0, 0, 3), (0, 2, 1)),
        (Fraction(1, 2), (0, 1, 2), (0, 3, 0)),
    )
    return BinomialSquareDecomposition(
        arity=3,
        terms=tuple(SquareTerm(coefficient=c, plus=p, minus=m) for c, p, m in terms),
    )
