"""Small exact linear algebra over the rationals.

Only what the cell computations need: row reduction, rank and one
particular solution of ``A x = b``.  Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def _echelon(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    ncols = len(matrix[0])
    rows = [[Fraction(v) for v in row] for row in matrix]
    return len(_echelon(rows, ncols)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """One rational solution of ``matrix @ x == rhs`` (free variables set to 0), or None."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [[Fraction(v) for v in matrix[i]] + [Fraction(rhs[i])] for i in range(nrows)]
    rows, pivots = _echelon(rows, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][ncols]
    return x
