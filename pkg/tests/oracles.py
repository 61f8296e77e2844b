"""Brute-force oracles used to cross-check the exact algorithms.

They share nothing with the library beyond the Simplex model and the
generic linear solver, and are only practical for small instances.
"""

import math
from fractions import Fraction
from itertools import combinations, product

from src.models.lattice import LatticePoint, Simplex
from src.utils.linear_algebra import solve, transpose


def weights(s: Simplex, p: LatticePoint) -> list[Fraction] | None:
    """Barycentric weights by Gaussian elimination on [V; 1...1]."""
    rows = transpose(s.vertices) + [[1] * s.n]
    rhs = list(p) + [Fraction(sum(p), s.degree_sum)]
    return solve(rows, rhs)


def _box(s: Simplex, k: int) -> list[range]:
    return [
        range(k * min(u[j] for u in s.vertices), k * max(u[j] for u in s.vertices) + 1)
        for j in range(s.n)
    ]


def box_size(s: Simplex, k: int) -> int:
    """Number of candidates the oracle scans (the last coordinate is implied)."""
    return math.prod(len(r) for r in _box(s, k)[:-1])


def lattice_points(s: Simplex, k: int) -> set[LatticePoint]:
    """kU ∩ Z^n by scanning the bounding box."""
    ranges = _box(s, k)
    total = k * s.degree_sum
    found = set()
    for prefix in product(*ranges[:-1]):
        last = total - sum(prefix)
        if last not in ranges[-1]:
            continue
        p = prefix + (last,)
        w = weights(s, p)
        if w is not None and all(x >= 0 for x in w):
            found.add(p)
    return found


def midpoint_pairs(
    y: LatticePoint, members: set[LatticePoint]
) -> list[tuple[LatticePoint, LatticePoint]]:
    """All pairs z1 < z2 of distinct even members with (z1 + z2) / 2 == y."""
    evens = sorted(p for p in members if all(c % 2 == 0 for c in p))
    return [
        (z1, z2)
        for z1, z2 in combinations(evens, 2)
        if all(a + b == 2 * c for a, b, c in zip(z1, z2, y))
    ]


def is_mediated(vertices: set[LatticePoint], members: set[LatticePoint]) -> bool:
    return all(y in vertices or midpoint_pairs(y, members) for y in members)


def maximal_mediated_set(s: Simplex) -> set[LatticePoint]:
    """Largest U-mediated subset of U ∩ Z^n by exhaustive subset search."""
    vertices = set(s.vertices)
    others = sorted(lattice_points(s, 1) - vertices)
    for size in range(len(others), 0, -1):
        for subset in combinations(others, size):
            members = vertices | set(subset)
            if is_mediated(vertices, members):
                return members
    return vertices
