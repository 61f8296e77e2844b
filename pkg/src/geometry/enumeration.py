"""Lattice points, even points and beads of a dilated simplex kU."""

from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from structlog import get_logger

from src.config import settings
from src.errors import BudgetExceeded
from src.geometry.simplex import contains
from src.models.lattice import LatticePoint, Simplex

logger = get_logger(__name__)


def _box_candidates(
    lows: list[int],
    highs: list[int],
    total: int,
) -> Iterator[LatticePoint]:
    """Integer tuples inside [lows, highs] with coordinate sum ``total``.

    The last coordinate is determined by the sum; partial prefixes whose
    remaining sum cannot be met by the remaining bounds are pruned.
    """
    n = len(lows)
    # suffix bounds for pruning
    min_rest = [0] * (n + 1)
    max_rest = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        min_rest[j] = min_rest[j + 1] + lows[j]
        max_rest[j] = max_rest[j + 1] + highs[j]

    prefix: list[int] = []

    def walk(j: int, remaining: int) -> Iterator[LatticePoint]:
        if j == n - 1:
            if lows[j] <= remaining <= highs[j]:
                yield tuple(prefix) + (remaining,)
            return
        lo = max(lows[j], remaining - max_rest[j + 1])
        hi = min(highs[j], remaining - min_rest[j + 1])
        for x in range(lo, hi + 1):
            prefix.append(x)
            yield from walk(j + 1, remaining - x)
            prefix.pop()

    yield from walk(0, total)


def enumerate_lattice_points(
    s: Simplex,
    k: int,
    max_box_points: int | None = None,
) -> frozenset[LatticePoint]:
    """Exactly kU ∩ Z^n.

    Scans the bounding box of the scaled vertices with coordinate-sum
    pruning and keeps the points that pass the exact membership test.

    Args:
        s: Validated simplex
        k: Positive dilation factor
        max_box_points: Cap on visited candidates (defaults to ENUM_MAX_BOX_POINTS)

    Raises:
        BudgetExceeded: If the scan visits more candidates than the cap
    """
    if k < 1:
        raise ValueError(f"Dilation factor must be positive, got {k}")
    limit = max_box_points if max_box_points is not None else settings.enumeration.max_box_points
    lows = [k * min(u[j] for u in s.vertices) for j in range(s.n)]
    highs = [k * max(u[j] for u in s.vertices) for j in range(s.n)]

    points: set[LatticePoint] = set()
    visited = 0
    for candidate in _box_candidates(lows, highs, k * s.degree_sum):
        visited += 1
        if visited > limit:
            raise BudgetExceeded(
                f"Lattice point scan of {k}U exceeded {limit} candidates",
                limit=limit,
                visited=visited,
            )
        if contains(s, k, candidate):
            points.add(candidate)

    logger.debug(
        "Enumerated lattice points",
        k=k,
        n=s.n,
        visited=visited,
        lattice_points=len(points),
    )
    return frozenset(points)


def is_even(p: LatticePoint) -> bool:
    return all(c % 2 == 0 for c in p)


def even_points(points: Iterable[LatticePoint]) -> frozenset[LatticePoint]:
    """The subset of points with all coordinates even."""
    return frozenset(p for p in points if is_even(p))


def compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All tuples of n non-negative integers summing to k."""
    for picks in combinations_with_replacement(range(n), k):
        counts = [0] * n
        for i in picks:
            counts[i] += 1
        yield tuple(counts)


def beads(s: Simplex, k: int) -> frozenset[LatticePoint]:
    """All points sum(a_i u_i) over compositions a of k; every bead is even."""
    result = set()
    for a in compositions(k, s.n):
        result.add(tuple(sum(a_i * u[j] for a_i, u in zip(a, s.vertices)) for j in range(s.n)))
    return frozenset(result)
