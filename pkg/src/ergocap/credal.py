"""Upper probabilities generated by finitely many measures, and their cores.

A :class:`Capacity` is always the upper envelope ``V(A) = max_P P(A)`` of a
finite generator set; arbitrary set functions cannot be built. Its core
The core ``{P : P(A) <= V(A) for all A}`` is a polytope whose vertices are
enumerated exactly. The invariant core is its slice of invariant members and
the ergodic members are the ergodic ones, which on a finite deterministic system are the
uniform measures on cycles that happen to lie in the core.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, NamedTuple, Optional

from .dynamics import FiniteSystem, analyze, invariant_events, preimage
from .errors import InputError, ResourceError
from .exactlp import linprog_max
from .measure import (Event, Measure, RandomVariable, full_event, states_of,
                      subset_sums, uniform)
from .polytope import brute_force_vertices, simplex_slice_vertices

DEFAULT_MAX_STATES = 8
MAX_STATES_ENV = "ERGOCAP_MAX_STATES"


class Witnessed(NamedTuple):
    """A predicate outcome that is truthy iff it holds; ``witness`` explains a failure."""

    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Capacity:
    """Upper envelope of a finite set of probability measures.

    ``values[A]`` is ``V(A)`` for the event with bitmask ``A``; all ``2**n``
    values are tabulated on construction.
    """

    generators: tuple[Measure, ...]
    values: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise InputError("a capacity needs at least one generator")
        n = gens[0].n
        for P in gens:
            if not isinstance(P, Measure):
                raise InputError(f"generator {P!r} is not a Measure")
            if P.n != n:
                raise InputError(f"generator lengths differ: {P.n} != {n}")
        object.__setattr__(self, "generators", gens)
        table = subset_sums(gens[0].mass)
        for P in gens[1:]:
            table = [max(a, b) for a, b in zip(table, subset_sums(P.mass))]
        object.__setattr__(self, "values", tuple(table))

    @property
    def n(self) -> int:
        return self.generators[0].n

    def __call__(self, A: Event) -> Fraction:
        return self.values[A]


def capacity_from_generators(Ps: Iterable[Measure]) -> Capacity:
    # Continuity from above is automatic on a finite space.
    return Capacity(tuple(Ps))


def max_states() -> int:
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{MAX_STATES_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise InputError(f"{MAX_STATES_ENV} must be positive")
    return value


def _require_size(n: int, limit: Optional[int]) -> None:
    limit = max_states() if limit is None else limit
    if n > limit:
        raise ResourceError(
            f"vertex enumeration on {n} states exceeds the cap of {limit}; "
            f"set {MAX_STATES_ENV}={n} (or pass max_states) to allow it")


def _same_size(cap: Capacity, other) -> None:
    size = other.n if isinstance(other, FiniteSystem) else len(other)
    if cap.n != size:
        raise InputError(f"capacity has {cap.n} states, got {size}")


def _by_size(n: int) -> list[Event]:
    return sorted(range(1 << n), key=lambda A: (A.bit_count(), A))


# -- predicates -----------------------------------------------------------

def is_invariant_capacity(cap: Capacity, sys: FiniteSystem) -> Witnessed:
    """``V(T^{-1} A) == V(A)`` for every event; witness is a smallest failing event."""
    _same_size(cap, sys)
    for A in _by_size(cap.n):
        if cap(preimage(sys, A)) != cap(A):
            return Witnessed(False, A)
    return Witnessed(True)


def is_ergodic_capacity(cap: Capacity, sys: FiniteSystem) -> Witnessed:
    """``V`` takes only the values 0 and 1 on invariant events."""
    _same_size(cap, sys)
    for A in sorted(invariant_events(sys), key=lambda A: (A.bit_count(), A)):
        if cap(A) not in (0, 1):
            return Witnessed(False, A)
    return Witnessed(True)


def core_membership(cap: Capacity, P: Measure) -> bool:
    return core_violation(cap, P) is None


def core_violation(cap: Capacity, P: Measure) -> Optional[Event]:
    """Smallest event ``A`` with ``P(A) > V(A)``, or None if ``P`` is in the core."""
    _same_size(cap, P)
    sums = subset_sums(P.mass)
    for A in _by_size(cap.n):
        if sums[A] > cap.values[A]:
            return A
    return None


def is_two_alternating(cap: Capacity) -> Witnessed:
    """``V(A|B) + V(A&B) <= V(A) + V(B)`` for all pairs; witness is the first failing pair."""
    v = cap.values
    N = len(v)
    for A in range(N):
        for B in range(A + 1, N):
            if v[A | B] + v[A & B] > v[A] + v[B]:
                return Witnessed(False, (A, B))
    return Witnessed(True)


# -- vertex enumeration ---------------------------------------------------

def dominance_constraints(cap: Capacity) -> list[tuple[Event, Fraction]]:
    """Non-implied dominance constraints ``P(A) <= V(A)`` in increasing ``|A|``.

    Dropped as implied: ``V(A) = 1``, and any ``A`` with a split
    ``V(A) = V(B) + V(A - B)`` into two nonempty parts.
    """
    n = cap.n
    out = []
    for A in _by_size(n):
        if A == 0 or A == full_event(n) or cap(A) == 1:
            continue
        if A.bit_count() > 1 and _splits_additively(cap, A):
            continue
        out.append((A, cap(A)))
    return out


def _splits_additively(cap: Capacity, A: Event) -> bool:
    B = (A - 1) & A
    while B:
        if cap(B) + cap(A ^ B) == cap(A):
            return True
        B = (B - 1) & A
    return False


def _homogeneous_rows(cap: Capacity, constraints) -> list[list[Fraction]]:
    # V(A) * sum(x) - sum_{i in A} x_i >= 0
    n = cap.n
    return [[u - (A >> i & 1) for i in range(n)] for A, u in constraints]


def invariance_equalities(sys: FiniteSystem) -> list[list[int]]:
    """Rows of ``(T_* p)_j - p_j = 0`` for each state ``j``."""
    n = sys.n
    return [[int(sys.map[i] == j) - int(i == j) for i in range(n)] for j in range(n)]


@lru_cache(maxsize=512)
def _core_vertices(cap: Capacity) -> tuple[Measure, ...]:
    rows = _homogeneous_rows(cap, dominance_constraints(cap))
    return tuple(Measure(v) for v in simplex_slice_vertices(cap.n, rows))


@lru_cache(maxsize=512)
def _theta0_vertices(cap: Capacity, sys: FiniteSystem) -> tuple[Measure, ...]:
    rows = _homogeneous_rows(cap, dominance_constraints(cap))
    verts = simplex_slice_vertices(cap.n, rows, invariance_equalities(sys))
    return tuple(Measure(v) for v in verts)


def core_vertices(cap: Capacity, max_states: Optional[int] = None) -> tuple[Measure, ...]:
    """Extreme points of the core, lexicographically sorted."""
    _require_size(cap.n, max_states)
    return _core_vertices(cap)


def theta0_vertices(cap: Capacity, sys: FiniteSystem, max_states: Optional[int] = None) -> tuple[Measure, ...]:
    """Extreme points of the invariant part of the core, lexicographically sorted."""
    _same_size(cap, sys)
    _require_size(cap.n, max_states)
    return _theta0_vertices(cap, sys)


def theta_star(cap: Capacity, sys: FiniteSystem) -> tuple[Measure, ...]:
    """Ergodic members of the core: uniform cycle measures dominated by ``V``.

    Only events inside the cycle need checking, since
    ``Uniform(c)(A) = Uniform(c)(A & c)`` and ``V`` is monotone.
    """
    _same_size(cap, sys)
    out = []
    for cyc in analyze(sys).cycles:
        L = len(cyc)
        c = sum(1 << s for s in cyc)
        ok = True
        B = c
        while B:
            if Fraction(B.bit_count(), L) > cap(B):
                ok = False
                break
            B = (B - 1) & c
        if ok:
            out.append(uniform(cap.n, cyc))
    return tuple(sorted(out))


def brute_force_core_vertices(cap: Capacity, sys: Optional[FiniteSystem] = None) -> list[Measure]:
    """Independent enumeration over all active-constraint subsets (all ``2**n - 2`` constraints).

    With ``sys`` given, enumerates the invariant slice instead.
    """
    n = cap.n
    bounds = [(states_of(A), cap(A)) for A in range(1, full_event(n))]
    eq = invariance_equalities(sys) if sys is not None else ()
    return [Measure(v) for v in brute_force_vertices(n, bounds, eq)]


def lp_upper_expectation(cap: Capacity, xi: RandomVariable) -> Fraction:
    """``max E_P[xi]`` over the core, solved as an exact LP with one slack per event."""
    _same_size(cap, xi)
    n = cap.n
    events = list(range(1, full_event(n)))
    nvar = n + len(events)
    A_eq = [[1] * n + [0] * len(events)]
    b_eq = [1]
    for k, A in enumerate(events):
        row = [A >> i & 1 for i in range(n)] + [0] * len(events)
        row[n + k] = 1
        A_eq.append(row)
        b_eq.append(cap(A))
    res = linprog_max(list(xi.values) + [0] * (nvar - n), A_eq, b_eq)
    assert res.status == "optimal", res.status
    return res.value


# -- integrals ------------------------------------------------------------

def choquet_integral(cap: Capacity, xi: RandomVariable) -> Fraction:
    """Asymmetric Choquet integral of ``xi`` with respect to ``V``.

    With the distinct values ``x_1 < ... < x_m`` and ``V(Omega) = 1`` the
    two improper integrals collapse to
    ``x_1 + sum_j (x_j - x_{j-1}) V(xi >= x_j)``.
    """
    _same_size(cap, xi)
    levels = sorted(set(xi.values))
    total = levels[0]
    for lo, hi in zip(levels, levels[1:]):
        upper = sum(1 << i for i, x in enumerate(xi.values) if x >= hi)
        total += (hi - lo) * cap(upper)
    return total


# -- bundle ---------------------------------------------------------------

@dataclass(frozen=True)
class CredalCore:
    capacity: Capacity
    core_vertices: tuple[Measure, ...]
    theta0_vertices: tuple[Measure, ...]
    theta_star: tuple[Measure, ...]


def credal_core(cap: Capacity, sys: FiniteSystem, max_states: Optional[int] = None) -> CredalCore:
    return CredalCore(
        capacity=cap,
        core_vertices=core_vertices(cap, max_states),
        theta0_vertices=theta0_vertices(cap, sys, max_states),
        theta_star=theta_star(cap, sys),
    )


def generators_span_core(cap: Capacity, max_states: Optional[int] = None) -> bool:
    """True iff every core vertex is a generator, i.e. ``conv(generators)`` is the whole core."""
    gens = set(cap.generators)
    return all(v in gens for v in core_vertices(cap, max_states))
