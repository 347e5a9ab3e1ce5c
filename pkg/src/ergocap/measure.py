"""Exact rationals, measures on a finite state space, and random variables.

States are the integers ``0 .. n-1``. Events are bitmasks: bit ``i`` is set
iff state ``i`` belongs to the event. All arithmetic uses
:class:`fractions.Fraction`, which keeps values in reduced form with a
positive denominator, so equality of measures is component-wise identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import ConditioningError, InputError

RATIONAL_PATTERN = re.compile(r"^-?[0-9]+(/[0-9]+)?$")

Event = int


def parse_rational(value) -> Fraction:
    """Convert an int, Fraction or canonical string like ``"-3/4"`` to a Fraction.

    Floats are refused: they carry binary rounding that the exact pipeline
    must never see.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if not RATIONAL_PATTERN.match(value):
            raise InputError(f"malformed rational {value!r}")
        num, _, den = value.partition("/")
        if den and int(den) == 0:
            raise InputError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise InputError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


# -- events ---------------------------------------------------------------

def event(states: Iterable[int]) -> Event:
    mask = 0
    for s in states:
        mask |= 1 << s
    return mask


def states_of(A: Event) -> list[int]:
    """Sorted list of the states in event ``A``."""
    out = []
    i = 0
    while A:
        if A & 1:
            out.append(i)
        A >>= 1
        i += 1
    return out


def full_event(n: int) -> Event:
    return (1 << n) - 1


def all_events(n: int) -> range:
    return range(1 << n)


def subset_sums(values: Sequence[Fraction]) -> list[Fraction]:
    """``out[A] = sum(values[i] for i in A)`` for every event A."""
    out = [Fraction(0)] * (1 << len(values))
    for A in range(1, len(out)):
        low = A & -A
        out[A] = out[A ^ low] + values[low.bit_length() - 1]
    return out


# -- value types ----------------------------------------------------------

def _rationals(values) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


@dataclass(frozen=True, order=True)
class SignedMeasure:
    """A finitely supported signed measure, one mass per state."""

    mass: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "mass", _rationals(self.mass))

    def __len__(self) -> int:
        return len(self.mass)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.mass)

    def __getitem__(self, i):
        return self.mass[i]

    @property
    def n(self) -> int:
        return len(self.mass)

    def __call__(self, A: Event) -> Fraction:
        return sum((m for i, m in enumerate(self.mass) if A >> i & 1), Fraction(0))

    def __sub__(self, other: SignedMeasure) -> SignedMeasure:
        _check_lengths(self, other)
        return SignedMeasure(tuple(a - b for a, b in zip(self.mass, other.mass)))

    def to_strings(self) -> list[str]:
        return [format_rational(m) for m in self.mass]


@dataclass(frozen=True, order=True)
class Measure(SignedMeasure):
    """A probability measure: nonnegative masses summing to exactly one."""

    def __post_init__(self):
        super().__post_init__()
        if not self.mass:
            raise InputError("a measure needs at least one state")
        for i, m in enumerate(self.mass):
            if m < 0:
                raise InputError(f"negative mass {m} at state {i}")
        total = sum(self.mass)
        if total != 1:
            raise InputError(f"masses sum to {total}, not 1")

    def support(self) -> Event:
        return event(i for i, m in enumerate(self.mass) if m)

    def __repr__(self) -> str:
        return f"Measure({', '.join(self.to_strings())})"


@dataclass(frozen=True, order=True)
class RandomVariable:
    """A real function on the states, ``values[i] = xi(i)``."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _rationals(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __add__(self, other: RandomVariable) -> RandomVariable:
        _check_lengths(self, other)
        return RandomVariable(tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, c) -> RandomVariable:
        c = parse_rational(c)
        return RandomVariable(tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def __neg__(self) -> RandomVariable:
        return RandomVariable(tuple(-v for v in self.values))

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self.values]

    def __repr__(self) -> str:
        return f"RandomVariable({', '.join(self.to_strings())})"


def indicator(n: int, A: Event) -> RandomVariable:
    return RandomVariable(tuple(A >> i & 1 for i in range(n)))


def point_mass(n: int, state: int) -> Measure:
    return Measure(tuple(int(i == state) for i in range(n)))


def uniform(n: int, states: Iterable[int]) -> Measure:
    states = set(states)
    if not states:
        raise InputError("uniform measure on an empty set")
    w = Fraction(1, len(states))
    return Measure(tuple(w if i in states else Fraction(0) for i in range(n)))


def mixture(weights: Sequence, measures: Sequence[Measure]) -> Measure:
    """Convex combination ``sum_k weights[k] * measures[k]``."""
    if len(weights) != len(measures) or not measures:
        raise InputError("mixture needs one weight per measure")
    n = measures[0].n
    out = [Fraction(0)] * n
    for w, P in zip(weights, measures):
        _check_lengths(measures[0], P)
        w = parse_rational(w)
        for i, m in enumerate(P.mass):
            out[i] += w * m
    return Measure(tuple(out))


def _check_lengths(a, b) -> None:
    if len(a) != len(b):
        raise InputError(f"length mismatch: {len(a)} != {len(b)}")


# -- operations -----------------------------------------------------------

def expectation(P: SignedMeasure, xi: RandomVariable) -> Fraction:
    _check_lengths(P, xi)
    return sum((p * x for p, x in zip(P.mass, xi.values)), Fraction(0))


def upper_expectation(Ps: Iterable[Measure], xi: RandomVariable) -> Fraction:
    """Maximum of ``E_P[xi]`` over a finite nonempty set of measures."""
    Ps = list(Ps)
    if not Ps:
        raise InputError("upper expectation over an empty set")
    return max(expectation(P, xi) for P in Ps)


def lower_expectation(Ps: Iterable[Measure], xi: RandomVariable) -> Fraction:
    return -upper_expectation(Ps, -xi)


def maximizers(Ps: Iterable[Measure], xi: RandomVariable) -> list[Measure]:
    """The measures attaining :func:`upper_expectation`, in input order."""
    Ps = list(Ps)
    best = upper_expectation(Ps, xi)
    return [P for P in Ps if expectation(P, xi) == best]


def hahn_decomposition(mu: SignedMeasure) -> tuple[Event, Event]:
    """Split the states into a positive and a negative set for ``mu``.

    Zero-mass states go to the positive side, so that for ``mu = Q - P``
    with ``Q`` a probability, ``Q`` is carried by the positive set.
    """
    pos = event(i for i, m in enumerate(mu.mass) if m >= 0)
    return pos, full_event(mu.n) & ~pos


def positive_variation(mu: SignedMeasure) -> Fraction:
    """Total mass of the positive part, ``mu^+(Omega)``."""
    return sum((m for m in mu.mass if m > 0), Fraction(0))


def conditional_measure(P: Measure, B: Event) -> Measure:
    pb = P(B)
    if pb == 0:
        raise ConditioningError(f"P({states_of(B)}) = 0")
    return Measure(tuple(m / pb if B >> i & 1 else Fraction(0) for i, m in enumerate(P.mass)))
