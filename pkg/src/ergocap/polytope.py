"""Exact vertex enumeration for polytopes inside the probability simplex.

The polytopes handled here have the form::

    { p in R^n : p >= 0, sum(p) = 1, a_k . p >= 0 (k in ineq), e_k . p = 0 (k in eq) }

with homogeneous rational rows. Because ``sum(p) = 1`` can be used to
homogenize any affine constraint, the set is a slice of the pointed cone
``{x >= 0, a_k . x >= 0, e_k . x = 0}``; its vertices are the extreme rays of
that cone normalized to unit sum.

:func:`double_description` computes the extreme rays incrementally with the
combinatorial adjacency test, on primitive integer vectors. The
:func:`brute_force_vertices` oracle instead solves every square subsystem of
active constraints and is only practical for a handful of states.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import rank, solve_unique

Row = Sequence[Fraction]


def _integer_row(row: Row) -> tuple[int, ...]:
    row = [Fraction(v) for v in row]
    den = math.lcm(*(v.denominator for v in row)) if row else 1
    ints = [int(v * den) for v in row]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints) if g > 1 else tuple(ints)


def _primitive(v: list[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _dot(a: Sequence[int], x: Sequence[int]) -> int:
    return sum(ai * xi for ai, xi in zip(a, x) if ai)


def double_description(n: int, ineq: Iterable[Row] = (), eq: Iterable[Row] = ()) -> list[tuple[int, ...]]:
    """Extreme rays of ``{x in R^n : x >= 0, a.x >= 0, e.x = 0}`` as primitive integer vectors.

    Equalities are inserted before inequalities. A constraint that every
    current ray already satisfies is redundant for the current cone and is
    skipped; this keeps the adjacency test valid because any H-representation
    of the cone may be used to compute zero sets.
    """
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # zero set of each ray as a bitmask over inserted constraints
    zeros = [sum(1 << j for j in range(n) if j != i) for i in range(n)]
    next_index = n
    constraints = [(_integer_row(e), True) for e in eq] + [(_integer_row(a), False) for a in ineq]

    for a, is_eq in constraints:
        vals = [_dot(a, r) for r in rays]
        if is_eq:
            if all(v == 0 for v in vals):
                continue
        elif all(v >= 0 for v in vals):
            continue
        bit = 1 << next_index
        next_index += 1
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]

        new_rays = []
        new_zeros = []
        for i in zer:
            new_rays.append(rays[i])
            new_zeros.append(zeros[i] | bit)
        if not is_eq:
            for i in pos:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i])
        for p in pos:
            for m in neg:
                common = zeros[p] & zeros[m]
                if _adjacent(common, p, m, zeros):
                    vp, vm = vals[p], -vals[m]
                    r = [vp * xm + vm * xp for xp, xm in zip(rays[p], rays[m])]
                    new_rays.append(_primitive(r))
                    new_zeros.append(common | bit)
        rays, zeros = new_rays, new_zeros
        if not rays:
            break
    return sorted(set(rays))


def _adjacent(common: int, p: int, m: int, zeros: list[int]) -> bool:
    for k, z in enumerate(zeros):
        if k != p and k != m and z & common == common:
            return False
    return True


def normalize_rays(rays: Iterable[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    out = set()
    for r in rays:
        s = sum(r)
        out.add(tuple(Fraction(x, s) for x in r))
    return sorted(out)


def simplex_slice_vertices(n: int, ineq: Iterable[Row] = (), eq: Iterable[Row] = ()) -> list[tuple[Fraction, ...]]:
    """Vertices of the polytope described in the module docstring, lexicographically sorted."""
    return normalize_rays(double_description(n, ineq, eq))


def brute_force_vertices(n: int, upper_bounds: Iterable[tuple[Sequence[int], Fraction]],
                         eq: Iterable[Row] = ()) -> list[tuple[Fraction, ...]]:
    """Reference enumeration by active-constraint subsets.

    The polytope is ``{p >= 0, sum(p) = 1, sum(p[i] for i in S) <= u (S, u in
    upper_bounds), e.p = 0}``. Every vertex is the unique solution of the
    equalities together with ``n - rank(equalities)`` tight inequalities
    (extend a basis of the equality rows by tight rows), so trying all such
    sets finds them all.
    """
    ineq_rows: list[tuple[list[Fraction], Fraction]] = []
    for i in range(n):
        ineq_rows.append(([Fraction(int(j == i)) for j in range(n)], Fraction(0)))  # p_i >= 0 tight
    bounds = []
    for S, u in upper_bounds:
        row = [Fraction(0)] * n
        for i in S:
            row[i] = Fraction(1)
        bounds.append((row, Fraction(u)))
        ineq_rows.append((row, Fraction(u)))
    base_rows = [[Fraction(1)] * n] + [[Fraction(v) for v in e] for e in eq]
    base_rhs = [Fraction(1)] + [Fraction(0)] * (len(base_rows) - 1)

    found = set()
    k = n - rank(base_rows)
    for combo in itertools.combinations(range(len(ineq_rows)), k):
        rows = base_rows + [ineq_rows[c][0] for c in combo]
        rhs = base_rhs + [ineq_rows[c][1] for c in combo]
        x = solve_unique(rows, rhs)
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        if any(sum(r[i] * x[i] for i in range(n)) > u for r, u in bounds):
            continue
        found.add(x)
    return sorted(found)
