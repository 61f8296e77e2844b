"""Mediated sets: the predicate, the maximal mediated set, and the SOS decision.

An agiform over U with apex w is sos iff some U-mediated set contains w.
Mediated sets are closed under union, so the union of all of them is the
greatest fixed point of the operator that deletes non-vertex points lacking
a midpoint representation; membership in that fixed point decides sos.
"""

import random
from collections import deque
from typing import Iterable, Literal

from structlog import get_logger

from src.errors import (
    InternalInvariantViolation,
    NotMediated,
    PointOutsideSimplex,
    VertexMissing,
)
from src.geometry import contains, enumerate_lattice_points, is_even
from src.models.lattice import LatticePoint, Simplex
from src.models.mediated import (
    MediationCertificate,
    MediationResult,
    MidpointPair,
    SosMembership,
)

logger = get_logger(__name__)


def find_midpoint_pair(
    y: LatticePoint,
    evens_sorted: list[LatticePoint],
    evens: frozenset[LatticePoint] | set[LatticePoint],
) -> MidpointPair | None:
    """Lexicographically smallest (z1, z2), z1 < z2, of even points with midpoint y."""
    for z1 in evens_sorted:
        z2 = tuple(2 * c - a for c, a in zip(y, z1))
        if z1 < z2 and z2 in evens:
            return z1, z2
    return None


def _has_midpoint_pair(y: LatticePoint, evens: Iterable[LatticePoint], members) -> bool:
    for z1 in evens:
        z2 = tuple(2 * c - a for c, a in zip(y, z1))
        if z2 != z1 and z2 in members:
            return True
    return False


def _certificate(
    points: Iterable[LatticePoint],
    vertices: set[LatticePoint],
    members: frozenset[LatticePoint],
) -> tuple[dict[LatticePoint, MidpointPair], list[LatticePoint]]:
    evens = frozenset(p for p in members if is_even(p))
    evens_sorted = sorted(evens)
    entries: dict[LatticePoint, MidpointPair] = {}
    missing: list[LatticePoint] = []
    for y in sorted(points):
        if y in vertices:
            continue
        pair = find_midpoint_pair(y, evens_sorted, evens)
        if pair is None:
            missing.append(y)
        else:
            entries[y] = pair
    return entries, missing


def is_mediated(s: Simplex, points: Iterable[LatticePoint]) -> MediationResult:
    """Check whether a set S is U-mediated.

    Returns:
        MediationResult with a certificate for every non-vertex point, or
        the points that have no representation

    Raises:
        VertexMissing: If S omits a vertex of U
        PointOutsideSimplex: If some point of S is not in U
    """
    members = frozenset(tuple(p) for p in points)
    vertices = set(s.vertices)
    missing_vertices = vertices - members
    if missing_vertices:
        raise VertexMissing(f"Set omits vertices {sorted(missing_vertices)}")
    outside = sorted(p for p in members if not contains(s, 1, p))
    if outside:
        raise PointOutsideSimplex(f"Points {outside} are not in U")

    entries, unrepresented = _certificate(members, vertices, members)
    if unrepresented:
        logger.debug("Set is not mediated", unrepresented=len(unrepresented))
        return MediationResult(mediated=False, unrepresented=tuple(unrepresented))
    return MediationResult(mediated=True, certificate=MediationCertificate(entries=entries))


def maximal_mediated_set(
    s: Simplex,
    strategy: Literal["rounds", "single"] = "rounds",
    seed: int | None = None,
    max_box_points: int | None = None,
) -> frozenset[LatticePoint]:
    """The greatest U-mediated set S* (or the vertex set when nothing else survives).

    Starts from U ∩ Z^n and deletes non-vertex points that are not the
    midpoint of two distinct even points of the current set until stable.

    Args:
        s: Validated simplex
        strategy: "rounds" deletes all unrepresentable points simultaneously;
            "single" deletes one at a time
        seed: Shuffle the iteration order (the fixed point does not depend on it)
        max_box_points: Enumeration budget override

    Raises:
        BudgetExceeded: Propagated from enumeration
    """
    current = set(enumerate_lattice_points(s, 1, max_box_points=max_box_points))
    vertices = set(s.vertices)
    rng = random.Random(seed) if seed is not None else None
    rounds = 0

    while True:
        rounds += 1
        candidates = sorted(current - vertices)
        evens = sorted(p for p in current if is_even(p))
        if rng is not None:
            rng.shuffle(candidates)
            rng.shuffle(evens)

        if strategy == "rounds":
            # read-only snapshot of the current set for the whole round
            snapshot = frozenset(current)
            doomed = [y for y in candidates if not _has_midpoint_pair(y, evens, snapshot)]
            if not doomed:
                break
            current.difference_update(doomed)
        else:
            victim = next(
                (y for y in candidates if not _has_midpoint_pair(y, evens, current)), None
            )
            if victim is None:
                break
            current.discard(victim)

    logger.debug(
        "Computed maximal mediated set",
        n=s.n,
        strategy=strategy,
        rounds=rounds,
        size=len(current),
    )
    return frozenset(current)


def mediation_certificate(
    s: Simplex, members: frozenset[LatticePoint]
) -> MediationCertificate:
    """Certificate for a set already known to be mediated (e.g. S*).

    Raises:
        NotMediated: If some non-vertex member is not the midpoint of two
            distinct even members
    """
    entries, missing = _certificate(members, set(s.vertices), members)
    if missing:
        raise NotMediated(f"Set is not mediated at {missing}")
    return MediationCertificate(entries=entries)


def sos_membership(
    s: Simplex,
    w: LatticePoint,
    max_box_points: int | None = None,
) -> SosMembership:
    """Decide whether the agiform over U with apex w is sos.

    True iff w lies in the maximal mediated set. When true, ``chain`` holds
    the midpoint representations reachable from w.

    Raises:
        PointOutsideSimplex: If w is not a lattice point of U
    """
    apex = tuple(w)
    if not contains(s, 1, apex):
        raise PointOutsideSimplex(f"Apex {apex} is not in U")

    maximal = maximal_mediated_set(s, max_box_points=max_box_points)
    if apex not in maximal:
        logger.info("Apex not in maximal mediated set", apex=apex, maximal_size=len(maximal))
        return SosMembership(apex=apex, is_sos=False, maximal_set=maximal)

    try:
        full = mediation_certificate(s, maximal).entries
    except NotMediated as e:
        raise InternalInvariantViolation(f"Maximal mediated set is not mediated: {e}") from e
    chain: dict[LatticePoint, MidpointPair] = {}
    queue = deque([apex])
    while queue:
        y = queue.popleft()
        if y in chain or y not in full:
            continue
        chain[y] = full[y]
        queue.extend(full[y])

    logger.info("Apex is in maximal mediated set", apex=apex, chain_length=len(chain))
    return SosMembership(
        apex=apex,
        is_sos=True,
        chain=MediationCertificate(entries=chain),
        maximal_set=maximal,
    )
