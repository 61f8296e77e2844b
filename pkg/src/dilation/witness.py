"""Witness pairs for the dilation theorem.

For k >= max{2, n-2}, every non-vertex lattice point w of kU is the average
of two distinct even points of kU. The constructions, tried in order:

- bead average: a non-vertex bead v is the average of v ± (u_i - u_j);
- greedy bead: pick a bead v = sum(a_i u_i) with a_i <= floor(2 beta_i),
  then 2w - v stays in kU;
- special interior point (k = n-2): w = (n-2)ũ splits around ũ;
- subdivision (k = n-2): replace one vertex by ũ and recurse.
"""

from fractions import Fraction
from typing import Sequence

from structlog import get_logger

from src.config import settings
from src.dilation.greedy import greedy_bounded_sum
from src.errors import (
    DepthExhausted,
    InsufficientFloorSum,
    InternalInvariantViolation,
    IsVertex,
    KTooSmall,
    NotInSimplex,
    TheoremPreconditionError,
    ValidationError,
)
from src.geometry import (
    combine,
    contains,
    enumerate_lattice_points,
    even_points,
    is_even,
    is_interior,
    is_vertex,
    scaled_barycentric,
    validate_simplex,
)
from src.models.dilation import ScaledBarycentric, WitnessPair, WitnessPath
from src.models.lattice import LatticePoint, Simplex

logger = get_logger(__name__)


def minimum_dilation(n: int) -> int:
    """Smallest k covered by the theorem: max{2, n-2}."""
    return max(2, n - 2)


def _reflect(w: LatticePoint, z: LatticePoint) -> LatticePoint:
    """2w - z."""
    return tuple(2 * a - b for a, b in zip(w, z))


def validate_witness(s: Simplex, k: int, pair: WitnessPair) -> WitnessPair:
    """Re-check a witness: distinct, even, midpoint, both in kU.

    Raises:
        InternalInvariantViolation: If any check fails
    """
    problems = []
    if pair.z1 == pair.z2:
        problems.append("z1 == z2")
    if not (is_even(pair.z1) and is_even(pair.z2)):
        problems.append("odd coordinate")
    if any(a + b != 2 * t for a, b, t in zip(pair.z1, pair.z2, pair.target)):
        problems.append("midpoint mismatch")
    if not (contains(s, k, pair.z1) and contains(s, k, pair.z2)):
        problems.append(f"outside {k}U")
    if problems:
        raise InternalInvariantViolation(
            f"Invalid witness for {pair.target} via {pair.path_label()}: {', '.join(problems)}"
        )
    return pair


def bead_average_witness(s: Simplex, k: int, a: Sequence[int]) -> WitnessPair:
    """Split the non-vertex bead v = sum(a_i u_i) as the average of v ± (u_i - u_j).

    i < j are the two smallest indices with a_i, a_j >= 1.

    Raises:
        IsVertex: If a is concentrated on one index
        ValueError: If a is not a composition of k into n parts
    """
    coefficients = tuple(a)
    if len(coefficients) != s.n or any(c < 0 for c in coefficients) or sum(coefficients) != k:
        raise ValueError(f"{list(coefficients)} is not a composition of {k} into {s.n} parts")
    positive = [i for i, c in enumerate(coefficients) if c >= 1]
    if len(positive) < 2:
        raise IsVertex(f"Bead {list(coefficients)} is a vertex of {k}U")

    i, j = positive[0], positive[1]
    v = combine(s, coefficients)
    u_i, u_j = s.vertices[i], s.vertices[j]
    z1 = tuple(x + p - q for x, p, q in zip(v, u_i, u_j))
    z2 = tuple(x - p + q for x, p, q in zip(v, u_i, u_j))
    return WitnessPair(target=v, z1=z1, z2=z2, path=WitnessPath.BEAD_AVERAGE)


def witness_large_k(
    s: Simplex,
    k: int,
    w: Sequence[int],
    sb: ScaledBarycentric | None = None,
) -> WitnessPair:
    """Average of a bead v = sum(a_i u_i) with a_i <= floor(2 beta_i) and 2w - v.

    Beads fall back to the bead-average construction. When k >= n-1 the sum
    of floors always reaches k.

    Raises:
        InsufficientFloorSum: If sum(floor(2 beta_i)) < k
    """
    target = tuple(w)
    sb = sb or scaled_barycentric(s, k, target)
    if sb.is_integral():
        return bead_average_witness(s, k, tuple(int(b) for b in sb.beta))
    if sb.floor_sum < k:
        raise InsufficientFloorSum(
            f"Floor sum {sb.floor_sum} < k={k} at {target}; use the full construction"
        )
    a = greedy_bounded_sum(sb.floors, k)
    z1 = combine(s, a)
    z2 = _reflect(target, z1)
    return WitnessPair(target=target, z1=z1, z2=z2, path=WitnessPath.GREEDY_BEAD)


def _interior_point(s: Simplex, w: LatticePoint, sb: ScaledBarycentric) -> LatticePoint:
    """ũ = sum((1 + floor(2 beta_i)) u_i) - 2w, checked against the proven identities."""
    if any(f == 0 for f in sb.fracs):
        raise InternalInvariantViolation(f"Some {{2 beta_i}} is 0 at {w}: {sb.fracs}")
    if sum(1 - f for f in sb.fracs) != 1:
        raise InternalInvariantViolation(f"sum(1 - {{2 beta_i}}) != 1 at {w}")
    y = combine(s, [1 + f for f in sb.floors])
    u_tilde = tuple(a - 2 * c for a, c in zip(y, w))
    if sum(u_tilde) != s.degree_sum:
        raise InternalInvariantViolation(f"ũ={u_tilde} is off the hyperplane sum={s.degree_sum}")
    if not is_even(u_tilde):
        raise InternalInvariantViolation(f"ũ={u_tilde} is not even")
    if not is_interior(s, 1, u_tilde):
        raise InternalInvariantViolation(f"ũ={u_tilde} is not strictly interior to U")
    return u_tilde


def _special_interior_witness(
    s: Simplex,
    w: LatticePoint,
    sb: ScaledBarycentric,
    u_tilde: LatticePoint,
) -> WitnessPair:
    """w = (n-2)ũ is the average of (n-3)ũ + u_l and (n-1)ũ - u_l with d_l >= 2."""
    n = s.n
    d = [1 + f for f in sb.floors]
    ell = next((i for i, d_i in enumerate(d) if d_i >= 2), None)
    if ell is None:
        raise InternalInvariantViolation(f"No d_i >= 2 at {w}: d={d}")
    coefficient = Fraction((n - 1) * d[ell], 2 * n - 3) - 1
    if coefficient <= 0:
        raise InternalInvariantViolation(f"Coefficient of u_{ell + 1} is {coefficient} <= 0")

    u_ell = s.vertices[ell]
    z1 = tuple((n - 3) * t + u for t, u in zip(u_tilde, u_ell))
    z2 = tuple((n - 1) * t - u for t, u in zip(u_tilde, u_ell))
    return WitnessPair(target=w, z1=z1, z2=z2, path=WitnessPath.SPECIAL_INTERIOR_POINT)


def witness_full(s: Simplex, w: Sequence[int], depth_budget: int) -> WitnessPair:
    """Witness for k = n-2 (n >= 4), with subdivision through ũ when needed.

    Raises:
        TheoremPreconditionError: If n < 4
        NotInSimplex / IsVertex: If w is not a non-vertex lattice point of (n-2)U
        DepthExhausted: If the subdivision budget runs out
        InternalInvariantViolation: If a proven identity fails
    """
    n = s.n
    if n < 4:
        raise TheoremPreconditionError(f"The k = n-2 construction needs n >= 4, got n={n}")
    k = n - 2
    target = tuple(w)
    if not contains(s, k, target):
        raise NotInSimplex(f"Point {target} is not in {k}U")
    if is_vertex(s, k, target):
        raise IsVertex(f"Point {target} is a vertex of {k}U")

    sb = scaled_barycentric(s, k, target)
    if sb.is_integral():
        return bead_average_witness(s, k, tuple(int(b) for b in sb.beta))
    if sb.floor_sum >= k:
        return witness_large_k(s, k, target, sb)
    if sb.floor_sum != n - 3:
        raise InternalInvariantViolation(f"Floor sum {sb.floor_sum} < n-3 at {target}")

    u_tilde = _interior_point(s, target, sb)
    if target == tuple(k * c for c in u_tilde):
        return _special_interior_witness(s, target, sb, u_tilde)

    if depth_budget <= 0:
        raise DepthExhausted(f"Subdivision budget exhausted at {target}")
    for ell in range(n):
        try:
            sub = validate_simplex(s.replace_vertex(ell, u_tilde))
        except ValidationError as e:
            raise InternalInvariantViolation(
                f"Subsimplex {ell + 1} through ũ={u_tilde} is invalid: {e}"
            ) from e
        if not contains(sub, k, target):
            continue
        logger.debug("Subdividing", target=target, u_tilde=u_tilde, vertex=ell + 1)
        inner = witness_full(sub, target, depth_budget - 1)
        if inner.path is WitnessPath.SUBDIVISION:
            return inner.model_copy(update={"depth": inner.depth + 1})
        return inner.model_copy(
            update={"path": WitnessPath.SUBDIVISION, "depth": 1, "resolved_by": inner.path}
        )
    raise InternalInvariantViolation(f"No subsimplex through ũ={u_tilde} contains {target}")


def default_depth_budget(s: Simplex, k: int, max_box_points: int | None = None) -> int:
    """Subdivision budget: DILATION_MAX_DEPTH, else the even-point count of kU."""
    if settings.dilation.max_depth > 0:
        return settings.dilation.max_depth
    return len(even_points(enumerate_lattice_points(s, k, max_box_points=max_box_points)))


def mediation_witness(
    s: Simplex,
    k: int,
    w: Sequence[int],
    depth_budget: int | None = None,
    max_box_points: int | None = None,
) -> WitnessPair:
    """Two distinct even points of kU averaging to the non-vertex lattice point w.

    ``max_box_points`` bounds the enumeration that derives the default
    subdivision depth budget; it is unused when ``depth_budget`` is given.

    Raises:
        KTooSmall: If k < max{2, n-2}
        NotInSimplex: If w is not in kU
        IsVertex: If w is a vertex of kU
        BudgetExceeded: If deriving the depth budget visits too many points
    """
    minimum = minimum_dilation(s.n)
    if k < minimum:
        raise KTooSmall(
            f"k={k} is below max{{2, n-2}}={minimum}; no mediation guarantee",
            k=k,
            minimum=minimum,
        )
    target = tuple(w)
    if len(target) != s.n or not contains(s, k, target):
        raise NotInSimplex(f"Point {target} is not in {k}U")
    if is_vertex(s, k, target):
        raise IsVertex(f"Point {target} is a vertex of {k}U")

    if k >= s.n - 1:
        pair = witness_large_k(s, k, target)
    else:
        budget = depth_budget
        if budget is None:
            budget = default_depth_budget(s, k, max_box_points=max_box_points)
        pair = witness_full(s, target, budget)

    if settings.dilation.strict_validation:
        validate_witness(s, k, pair)
    return pair
