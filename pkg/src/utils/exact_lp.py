"""Exact phase-1 simplex method: find x >= 0 with A x = b over the rationals.

Dense tableau on ``Fraction`` entries with Bland's rule (smallest-index
entering and leaving variables), which cannot cycle.
"""

from fractions import Fraction
from typing import Sequence

from structlog import get_logger

from src.errors import BudgetExceeded

logger = get_logger(__name__)


class PhaseOneTableau:
    """Tableau for min sum(artificials) s.t. A x + I a = b, x, a >= 0, b >= 0."""

    def __init__(self, matrix: Sequence[Sequence[int | Fraction]], rhs: Sequence[int | Fraction]):
        self.m = len(matrix)
        self.n_vars = len(matrix[0]) if self.m else 0
        self.width = self.n_vars + self.m
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        for i, (row, b) in enumerate(zip(matrix, rhs)):
            sign = -1 if b < 0 else 1
            self.rows.append(
                [sign * Fraction(a) for a in row] + [Fraction(int(t == i)) for t in range(self.m)]
            )
            self.rhs.append(sign * Fraction(b))
        self.basis = [self.n_vars + i for i in range(self.m)]
        # reduced costs of the phase-1 objective for the artificial starting basis
        self.cost = [
            -sum((r[j] for r in self.rows), Fraction(0)) if j < self.n_vars else Fraction(0)
            for j in range(self.width)
        ]
        self.pivots = 0

    def _entering(self) -> int | None:
        for j, c in enumerate(self.cost):
            if c < 0:
                return j
        return None

    def _leaving(self, j: int) -> int | None:
        best: int | None = None
        best_ratio: Fraction | None = None
        for i, row in enumerate(self.rows):
            if row[j] > 0:
                ratio = self.rhs[i] / row[j]
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.basis[i] < self.basis[best])
                ):
                    best, best_ratio = i, ratio
        return best

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.rows[i]
        p = pivot_row[j]
        self.rows[i] = pivot_row = [v / p for v in pivot_row]
        self.rhs[i] = self.rhs[i] / p
        for r in range(self.m):
            if r == i:
                continue
            factor = self.rows[r][j]
            if factor != 0:
                self.rows[r] = [a - factor * b for a, b in zip(self.rows[r], pivot_row)]
                self.rhs[r] -= factor * self.rhs[i]
        factor = self.cost[j]
        if factor != 0:
            self.cost = [a - factor * b for a, b in zip(self.cost, pivot_row)]
        self.basis[i] = j
        self.pivots += 1

    def solve(self, max_pivots: int) -> list[Fraction] | None:
        """Run Bland pivots to optimality; return a feasible x or None."""
        while True:
            j = self._entering()
            if j is None:
                break
            i = self._leaving(j)
            if i is None:
                # phase-1 objective is bounded below by 0
                break
            if self.pivots >= max_pivots:
                raise BudgetExceeded(
                    f"Simplex method exceeded {max_pivots} pivots", limit=max_pivots
                )
            self.pivot(i, j)

        infeasibility = sum(
            (self.rhs[i] for i, var in enumerate(self.basis) if var >= self.n_vars),
            Fraction(0),
        )
        if infeasibility != 0:
            logger.debug("Phase one infeasible", infeasibility=str(infeasibility))
            return None
        solution = [Fraction(0)] * self.n_vars
        for i, var in enumerate(self.basis):
            if var < self.n_vars:
                solution[var] = self.rhs[i]
        return solution


def find_nonnegative_solution(
    matrix: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
    max_pivots: int = 100_000,
) -> list[Fraction] | None:
    """An exact basic solution of A x = b with x >= 0, or None when infeasible.

    Raises:
        BudgetExceeded: If more than ``max_pivots`` pivots are needed
    """
    if not matrix:
        return []
    tableau = PhaseOneTableau(matrix, rhs)
    solution = tableau.solve(max_pivots)
    logger.debug(
        "Phase one finished",
        rows=tableau.m,
        columns=tableau.n_vars,
        pivots=tableau.pivots,
        feasible=solution is not None,
    )
    if solution is None:
        return None
    for row, b in zip(matrix, rhs):
        if sum((Fraction(a) * x for a, x in zip(row, solution) if a), Fraction(0)) != b:
            raise ArithmeticError("Phase-one solution does not satisfy A x = b")
    return solution
