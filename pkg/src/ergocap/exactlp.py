"""A small two-phase simplex method in exact rational arithmetic.

Solves ``max c.x  s.t.  A x = b, x >= 0`` using Bland's rule, which rules
out cycling. Meant for desk-scale cross-checks (tens of variables), not for
speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Optional[Fraction] = None
    x: Optional[tuple[Fraction, ...]] = None


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    lead = tab[r][c]
    tab[r] = [v / lead for v in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [a - f * b for a, b in zip(tab[i], tab[r])]
    basis[r] = c


def _run(tab, basis, obj_row, allowed) -> bool:
    """Iterate until optimal. ``tab[obj_row]`` holds reduced costs (minimization form).

    Returns False if the problem is unbounded.
    """
    m = len(basis)
    last = len(tab[0]) - 1
    while True:
        col = next((j for j in allowed if tab[obj_row][j] < 0), None)
        if col is None:
            return True
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][last] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], col)


def linprog_max(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    nvar = len(c)
    rows = []
    for row, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row, b = [-v for v in row], -b
        rows.append(row + [b])
    m = len(rows)
    # columns: original vars, artificials, rhs
    tab = []
    for i, row in enumerate(rows):
        art = [Fraction(int(i == k)) for k in range(m)]
        tab.append(row[:nvar] + art + [row[nvar]])
    basis = [nvar + i for i in range(m)]
    width = nvar + m + 1

    # phase one: minimise the sum of artificials
    phase1 = [Fraction(0)] * width
    for i in range(m):
        phase1 = [a - b for a, b in zip(phase1, tab[i])]
    for k in range(m):
        phase1[nvar + k] = Fraction(0)
    tab.append(phase1)
    _run(tab, basis, m, range(nvar + m))
    if tab[m][-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    tab.pop()

    obj = [Fraction(0)] * width
    for j in range(nvar):
        obj[j] = -Fraction(c[j])
    for i in range(m):
        cb = obj[basis[i]]
        if cb != 0:
            obj = [a - cb * b for a, b in zip(obj, tab[i])]
    tab.append(obj)
    if not _run(tab, basis, m, range(nvar)):
        return LPResult("unbounded")
    x = [Fraction(0)] * nvar
    for i in range(m):
        if basis[i] < nvar:
            x[basis[i]] = tab[i][-1]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, tuple(x))


def in_convex_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test whether ``point`` is a convex combination of ``points``."""
    if not points:
        return False
    d = len(point)
    A = [[Fraction(p[i]) for p in points] for i in range(d)]
    A.append([Fraction(1)] * len(points))
    b = [Fraction(v) for v in point] + [Fraction(1)]
    return linprog_max([0] * len(points), A, b).status == "optimal"
