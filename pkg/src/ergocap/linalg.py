"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def _rref(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    m = [[Fraction(v) for v in row] for row in rows]
    return len(_rref(m, len(m[0])))


def solve_unique(rows: Sequence[Sequence], rhs: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Solve ``rows @ x = rhs`` exactly.

    Returns the solution if it exists and is unique, otherwise ``None``.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = _rref(m, ncols + 1)
    if ncols in pivots:
        return None  # inconsistent
    if len(pivots) < ncols:
        return None  # underdetermined
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return tuple(x)
