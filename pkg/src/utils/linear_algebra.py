"""Exact linear algebra over the rationals.

Row reduction works on ``Fraction`` entries; results that feed integer
predicates are returned fraction-free (an integer matrix with a common
positive denominator) so hot loops stay in integer arithmetic.
"""

from fractions import Fraction
from typing import Sequence

from src.utils.rational import lcm_of_denominators

Matrix = list[list[Fraction]]


def _to_matrix(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def row_echelon(rows: Sequence[Sequence[int | Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduce ``rows`` to reduced row echelon form.

    Returns:
        Tuple of (reduced matrix, pivot column indices)
    """
    m = _to_matrix(rows)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r >= n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [v / fp for v in m[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def solve(
    rows: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> list[Fraction] | None:
    """Solve ``A x = b`` exactly.

    Free variables (if any) are set to zero.

    Returns:
        A solution vector, or None when the system is inconsistent
    """
    n_cols = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = row_echelon(augmented)
    if n_cols in pivots:
        return None
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][n_cols]
    return solution


def inverse_fraction_free(
    rows: Sequence[Sequence[int | Fraction]],
) -> tuple[tuple[tuple[int, ...], ...], int] | None:
    """Invert a square matrix, returning it as ``(N, D)`` with ``A^-1 = N / D``.

    ``N`` is an integer matrix and ``D`` a positive integer.

    Returns:
        The fraction-free inverse, or None when the matrix is singular
    """
    size = len(rows)
    augmented = [
        list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(rows)
    ]
    reduced, pivots = row_echelon(augmented)
    if pivots[:size] != list(range(size)):
        return None
    inverse = [row[size:] for row in reduced]
    denominator = lcm_of_denominators(v for row in inverse for v in row)
    numerators = tuple(tuple(int(v * denominator) for v in row) for row in inverse)
    return numerators, denominator


def transpose(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Transpose a rectangular matrix."""
    return [list(col) for col in zip(*rows)]
