"""Finite deterministic systems ``(Omega, T)`` and their functional graphs.

On a finite set every orbit is eventually periodic, so the invariant
sigma-algebra is generated by the weakly connected components of the graph
``i -> T(i)``: an event satisfies ``T^{-1} A = A`` iff it is a union of
components. Each component holds exactly one cycle, and the ergodic
measures are exactly the uniform distributions on those cycles.

Averaging operators that would need a Banach-Mazur limit on infinite
spaces are computed here as exact Cesaro limits, which exist because the
sequence ``T_*^k P`` is eventually periodic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InputError
from .measure import Event, Measure, RandomVariable, event

__all__ = [
    "FiniteSystem",
    "InvariantStructure",
    "analyze",
    "preimage",
    "is_invariant_set",
    "invariant_events",
    "pushforward",
    "cesaro_average",
    "cesaro_invariantize",
    "orbit_preperiod",
    "birkhoff_average",
    "birkhoff_limit",
    "birkhoff_limit_function",
    "is_invariant_measure",
    "identity_system",
]


@dataclass(frozen=True)
class FiniteSystem:
    """The self-map ``T`` of ``{0, ..., n-1}``; ``map[i] = T(i)``."""

    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.map)
        object.__setattr__(self, "map", m)
        if not m:
            raise InputError("a system needs at least one state")
        for i, t in enumerate(m):
            if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t < len(m):
                raise InputError(f"map[{i}]={t} out of range")

    @property
    def n(self) -> int:
        return len(self.map)

    def orbit(self, omega: int, length: int) -> list[int]:
        out = []
        for _ in range(length):
            out.append(omega)
            omega = self.map[omega]
        return out


@dataclass(frozen=True)
class InvariantStructure:
    """Components, cycles and basins of a functional graph.

    ``components[k]`` is the sorted state list of the k-th component and
    ``cycles[k]`` its cycle, starting at the smallest cycle state. Components
    are ordered by their smallest state. ``depth[i]`` is the number of steps
    ``i`` needs to reach its cycle.
    """

    components: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]
    basin: tuple[int, ...]
    depth: tuple[int, ...]

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def component_events(self) -> tuple[Event, ...]:
        return tuple(event(c) for c in self.components)

    @property
    def cycle_events(self) -> tuple[Event, ...]:
        return tuple(event(c) for c in self.cycles)

    @property
    def cycle_states(self) -> Event:
        out = 0
        for c in self.cycle_events:
            out |= c
        return out

    @property
    def preperiod(self) -> int:
        return max(self.depth)

    @property
    def period(self) -> int:
        """Least common multiple of the cycle lengths."""
        return math.lcm(*self.cycle_lengths)

    def cycle_of(self, omega: int) -> tuple[int, ...]:
        return self.cycles[self.basin[omega]]


@lru_cache(maxsize=1024)
def analyze(sys: FiniteSystem) -> InvariantStructure:
    T = sys.map
    n = sys.n
    cycle_id = [-1] * n
    depth = [-1] * n
    status = [0] * n  # 0 unseen, 1 on the current path, 2 finished
    raw_cycles: list[list[int]] = []
    for s in range(n):
        if status[s]:
            continue
        path = []
        x = s
        while status[x] == 0:
            status[x] = 1
            path.append(x)
            x = T[x]
        if status[x] == 1:
            start = path.index(x)
            cyc = path[start:]
            for y in cyc:
                cycle_id[y] = len(raw_cycles)
                depth[y] = 0
                status[y] = 2
            raw_cycles.append(cyc)
            path = path[:start]
        for y in reversed(path):
            cycle_id[y] = cycle_id[T[y]]
            depth[y] = depth[T[y]] + 1
            status[y] = 2

    members: list[list[int]] = [[] for _ in raw_cycles]
    for i in range(n):
        members[cycle_id[i]].append(i)
    order = sorted(range(len(raw_cycles)), key=lambda k: members[k][0])
    relabel = {old: new for new, old in enumerate(order)}

    cycles = []
    for old in order:
        cyc = raw_cycles[old]
        r = cyc.index(min(cyc))
        cycles.append(tuple(cyc[r:] + cyc[:r]))
    return InvariantStructure(
        components=tuple(tuple(members[old]) for old in order),
        cycles=tuple(cycles),
        basin=tuple(relabel[cycle_id[i]] for i in range(n)),
        depth=tuple(depth),
    )


def preimage(sys: FiniteSystem, A: Event) -> Event:
    return event(i for i, t in enumerate(sys.map) if A >> t & 1)


def is_invariant_set(sys: FiniteSystem, A: Event) -> bool:
    return preimage(sys, A) == A


def invariant_events(sys: FiniteSystem) -> Iterator[Event]:
    """All ``2**c`` unions of the ``c`` components, by increasing bitmask of components."""
    comps = analyze(sys).component_events
    for sel in range(1 << len(comps)):
        A = 0
        for k, c in enumerate(comps):
            if sel >> k & 1:
                A |= c
        yield A


def _check(sys: FiniteSystem, values: Sequence) -> None:
    if len(values) != sys.n:
        raise InputError(f"length {len(values)} does not match {sys.n} states")


def pushforward(sys: FiniteSystem, P: Measure) -> Measure:
    _check(sys, P)
    out = [Fraction(0)] * sys.n
    for i, m in enumerate(P.mass):
        out[sys.map[i]] += m
    return Measure(tuple(out))


def cesaro_average(sys: FiniteSystem, P: Measure, horizon: int, start: int = 0) -> Measure:
    """``(1/horizon) * sum_{k=start}^{start+horizon-1} T_*^k P`` by explicit iteration."""
    if horizon < 1:
        raise InputError("horizon must be positive")
    _check(sys, P)
    Q = P
    for _ in range(start):
        Q = pushforward(sys, Q)
    acc = [Fraction(0)] * sys.n
    for _ in range(horizon):
        for i, m in enumerate(Q.mass):
            acc[i] += m
        Q = pushforward(sys, Q)
    return Measure(tuple(a / horizon for a in acc))


def cesaro_invariantize(sys: FiniteSystem, P: Measure) -> Measure:
    """The limit of the Cesaro averages of ``T_*^k P``.

    Closed form: each state's mass is spread uniformly over the cycle it
    drains into. The result is invariant and agrees with ``P`` on every
    invariant event.
    """
    _check(sys, P)
    st = analyze(sys)
    out = [Fraction(0)] * sys.n
    for i, m in enumerate(P.mass):
        if m:
            cyc = st.cycle_of(i)
            share = m / len(cyc)
            for j in cyc:
                out[j] += share
    return Measure(tuple(out))


def orbit_preperiod(sys: FiniteSystem, P: Measure) -> int:
    """Least ``k`` such that ``T_*^k P`` lives on cycle states.

    From that index on the sequence ``T_*^k P`` is periodic with period
    dividing ``analyze(sys).period``.
    """
    _check(sys, P)
    depth = analyze(sys).depth
    return max((depth[i] for i, m in enumerate(P.mass) if m), default=0)


def birkhoff_average(sys: FiniteSystem, xi: RandomVariable, omega: int,
                     horizon: int, start: int = 0) -> Fraction:
    """Time mean ``(1/h) sum_{k=start}^{start+h-1} xi(T^k omega)``."""
    if horizon < 1:
        raise InputError("horizon must be positive")
    _check(sys, xi)
    orbit = sys.orbit(omega, start + horizon)[start:]
    return sum((xi[x] for x in orbit), Fraction(0)) / horizon


def birkhoff_limit(sys: FiniteSystem, xi: RandomVariable, omega: int) -> Fraction:
    """Exact limit of the time means: the mean of ``xi`` over the cycle of ``omega``."""
    _check(sys, xi)
    cyc = analyze(sys).cycle_of(omega)
    return sum((xi[j] for j in cyc), Fraction(0)) / len(cyc)


def birkhoff_limit_function(sys: FiniteSystem, xi: RandomVariable) -> RandomVariable:
    """The limit function ``xi_star``, constant on each component."""
    _check(sys, xi)
    st = analyze(sys)
    means = [sum((xi[j] for j in c), Fraction(0)) / len(c) for c in st.cycles]
    return RandomVariable(tuple(means[st.basin[i]] for i in range(sys.n)))


def is_invariant_measure(sys: FiniteSystem, P: Measure) -> bool:
    return pushforward(sys, P) == P


def identity_system(n: int) -> FiniteSystem:
    return FiniteSystem(tuple(range(n)))
