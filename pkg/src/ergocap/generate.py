"""Seeded random instances and the counterexample search harness.

Everything here is a pure function of its integer arguments: instance ``i``
of a run with seed ``s`` draws from ``random.Random(derive_seed(s, i))``, so
results do not depend on evaluation order.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Optional

from .credal import (Capacity, choquet_integral, core_vertices,
                     is_ergodic_capacity, is_invariant_capacity,
                     is_two_alternating, theta0_vertices, theta_star)
from .dynamics import FiniteSystem, analyze, pushforward
from .errors import InputError
from .fixtures import fixture_pool
from .io import Instance
from .measure import (Measure, RandomVariable, indicator, mixture, states_of,
                      uniform, upper_expectation)

KINDS = ("random", "invariant", "ergodic")
PROPERTIES = ("choquet-gap", "structure-needs-ergodicity", "non-two-alternating")


def derive_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_measure(rng: random.Random, n: int, max_denominator: int = 12,
                   support=None) -> Measure:
    """Uniformly random composition of ``d`` units over ``support``, scaled by ``1/d``."""
    states = list(range(n)) if support is None else list(support)
    d = rng.randint(1, max_denominator)
    cuts = sorted(rng.randint(0, d) for _ in range(len(states) - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    mass = [Fraction(0)] * n
    for s, p in zip(states, parts):
        mass[s] = Fraction(p, d)
    return Measure(tuple(mass))


def random_variable(rng: random.Random, n: int, low: int = -2, high: int = 2,
                    max_denominator: int = 8) -> RandomVariable:
    vals = []
    for _ in range(n):
        d = rng.randint(1, max_denominator)
        vals.append(Fraction(rng.randint(low * d, high * d), d))
    return RandomVariable(tuple(vals))


def random_convex_combination(rng: random.Random, measures, max_denominator: int = 12) -> Measure:
    w = random_measure(rng, len(measures), max_denominator)
    return mixture(w.mass, measures)


def _orbit(sys: FiniteSystem, P: Measure) -> list[Measure]:
    """``P, T_*P, T_*^2 P, ...`` up to the first repeat (``P`` must live on cycles)."""
    out = [P]
    Q = pushforward(sys, P)
    while Q not in out:
        out.append(Q)
        Q = pushforward(sys, Q)
    return out


def _cycle_measure(rng, sys, cyc, max_den, slots) -> list[Measure]:
    n = sys.n
    if rng.random() < 0.5:
        orb = _orbit(sys, random_measure(rng, n, max_den, support=cyc))
        if len(orb) <= slots:
            return orb
    return [uniform(n, cyc)]


def _multi_cycle_map(rng: random.Random, n: int) -> FiniteSystem:
    """A map whose cycles cover a random subset of states; the rest feed into it.

    Uniform random maps rarely have more than one cycle, which makes for
    dull invariant instances.
    """
    states = list(range(n))
    rng.shuffle(states)
    m = rng.randint((n + 1) // 2, n)
    on_cycle, rest = states[:m], states[m:]
    T = [0] * n
    i = 0
    while i < m:
        L = rng.randint(1, m - i)
        cyc = on_cycle[i:i + L]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            T[a] = b
        i += L
    placed = list(on_cycle)
    for s in rest:
        T[s] = rng.choice(placed)
        placed.append(s)
    return FiniteSystem(tuple(T))


def _invariant_generators(rng, sys, k, max_den, ergodic: bool) -> list[Measure]:
    """Generator sets closed under ``T_*`` and supported on cycle states.

    Closure under push-forward makes the envelope invariant. With
    ``ergodic=True`` every component that carries mass also carries a
    generator concentrated on it, so ``V`` is 0 or 1 on invariant events.
    """
    n = sys.n
    cycles = analyze(sys).cycles
    gens: list[Measure] = []
    most = min(len(cycles), k)
    charged = rng.sample(range(len(cycles)), most if rng.random() < 0.5 else rng.randint(1, most))
    if ergodic:
        for idx, c in enumerate(charged):
            slots = k - len(gens) - (len(charged) - idx - 1)
            gens.extend(_cycle_measure(rng, sys, cycles[c], max_den, slots))
    pool = charged if ergodic else list(range(len(cycles)))
    for _ in range(8):
        if len(gens) >= k:
            break
        slots = k - len(gens)
        if rng.random() < 0.4:
            c = rng.choice(pool)
            orb = _orbit(sys, random_measure(rng, n, max_den, support=cycles[c]))
        else:
            parts = rng.sample(pool, rng.randint(1, len(pool)))
            w = random_measure(rng, len(parts), max_den)
            pieces = [uniform(n, cycles[c]) for c in parts]
            orb = [mixture(w.mass, pieces)]
        if len(orb) <= slots:
            gens.extend(orb)
    if not gens:
        gens.append(uniform(n, cycles[charged[0]]))
    seen = []
    for P in gens:
        if P not in seen:
            seen.append(P)
    return seen


def generate_instance(n: int, k: int, seed: int, max_denominator: int = 12,
                      kind: str = "random") -> Instance:
    """A random map on ``n`` states with at most ``k`` rational generators.

    ``kind="random"`` draws ``k`` unrelated full-support measures;
    ``"invariant"`` and ``"ergodic"`` build generator sets whose envelope is
    invariant (and ergodic) by construction.
    """
    if n < 1 or k < 1:
        raise InputError("need n >= 1 and k >= 1")
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    rng = random.Random(seed)
    if kind == "random":
        sys = FiniteSystem(tuple(rng.randrange(n) for _ in range(n)))
    else:
        sys = _multi_cycle_map(rng, n)
    if kind == "random":
        gens = [random_measure(rng, n, max_denominator) for _ in range(k)]
    else:
        gens = _invariant_generators(rng, sys, k, max_denominator, ergodic=kind == "ergodic")
    name = f"gen-n{n}-k{k}-s{seed}" + ("" if kind == "random" else f"-{kind}")
    return Instance(sys, Capacity(tuple(gens)), name)


def ergodic_corpus(count: int, seed: int = 0, max_states: int = 6,
                   max_generators: int = 4) -> list[Instance]:
    """The first ``count`` seeded instances that pass the invariance and ergodicity checks."""
    return [inst for _, inst in _corpus_stream(seed, max_states, max_generators, count)]


def _corpus_stream(seed, max_states, max_generators, count) -> Iterator[tuple[int, Instance]]:
    found = 0
    index = 0
    while found < count:
        s = derive_seed(seed, index)
        rng = random.Random(s)
        # lean towards several states and generators; tiny cases are still drawn
        n = min(max_states, rng.choice([1, 2, 3, 3, 4, 4, 5, 5, 6, 6]))
        k = min(max_generators, rng.choice([1, 2, 2, 3, 3, 4, 4]))
        roll = rng.random()
        kind = "ergodic" if roll < 0.8 else ("invariant" if roll < 0.9 else "random")
        inst = generate_instance(n, k, s, kind=kind)
        if is_invariant_capacity(inst.capacity, inst.system) and is_ergodic_capacity(inst.capacity, inst.system):
            found += 1
            yield index, inst
        index += 1


# -- search harness -------------------------------------------------------

@dataclass
class SearchResult:
    property: str
    seed: int
    budget: int
    examined: int
    found: bool
    index: Optional[int] = None
    instance: Optional[Instance] = None
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "seed": self.seed,
            "budget": self.budget,
            "examined": self.examined,
            "found": self.found,
            "index": self.index,
            "instance": self.instance.to_dict() if self.instance else None,
            "witness": self.witness,
        }


def _structure_gap(inst: Instance) -> Optional[dict]:
    sys, cap = inst.system, inst.capacity
    if not is_invariant_capacity(cap, sys) or is_ergodic_capacity(cap, sys):
        return None
    verts = set(theta0_vertices(cap, sys))
    erg = set(theta_star(cap, sys))
    if verts == erg:
        return None
    return {"theta0_vertices": [v.to_strings() for v in sorted(verts)],
            "theta_star": [v.to_strings() for v in sorted(erg)]}


def _non_two_alternating(inst: Instance) -> Optional[dict]:
    res = is_two_alternating(inst.capacity)
    if res:
        return None
    A, B = res.witness
    cap = inst.capacity
    return {"A": states_of(A), "B": states_of(B),
            "lhs": str(cap(A | B) + cap(A & B)), "rhs": str(cap(A) + cap(B))}


def _choquet_gap(inst: Instance) -> Optional[dict]:
    """For a failing pair ``(A, B)`` the gamble ``1_A + 1_B`` separates the two functionals.

    ``choquet(1_A + 1_B) = V(A|B) + V(A&B)`` while any core member gives
    ``P(A) + P(B) <= V(A) + V(B)``.
    """
    pair = _non_two_alternating(inst)
    if pair is None:
        return None
    cap = inst.capacity
    n = cap.n
    A = sum(1 << i for i in pair["A"])
    B = sum(1 << i for i in pair["B"])
    xi = indicator(n, A) + indicator(n, B)
    core_up = upper_expectation(core_vertices(cap), xi)
    choq = choquet_integral(cap, xi)
    if core_up >= choq:
        return None
    return dict(pair, xi=xi.to_strings(), core_upper=str(core_up), choquet=str(choq))


_TESTS = {
    "structure-needs-ergodicity": _structure_gap,
    "non-two-alternating": _non_two_alternating,
    "choquet-gap": _choquet_gap,
}


def search(property: str, budget: int, seed: int, n: int = 4, k: int = 3) -> SearchResult:
    """Scan seeded candidates for an instance with ``property``.

    For ``structure-needs-ergodicity`` the shipped fixtures are examined
    first (not counted against ``budget``), then invariant random instances
    on up to ``n`` states. The other properties scan random instances with
    ``n`` states and ``k`` generators.
    """
    if property not in _TESTS:
        raise InputError(f"unknown property {property!r}; choose from {', '.join(PROPERTIES)}")
    if budget < 0:
        raise InputError("budget must be nonnegative")
    test = _TESTS[property]
    examined = 0
    if property == "structure-needs-ergodicity":
        for inst in fixture_pool():
            examined += 1
            w = test(inst)
            if w is not None:
                return SearchResult(property, seed, budget, examined, True, None, inst, w)
    for i in range(budget):
        s = derive_seed(seed, i)
        if property == "structure-needs-ergodicity":
            size = random.Random(s).randint(1, n)
            inst = generate_instance(size, k, s, kind="invariant")
        else:
            inst = generate_instance(n, k, s)
        examined += 1
        w = test(inst)
        if w is not None:
            return SearchResult(property, seed, budget, examined, True, i, inst, w)
    return SearchResult(property, seed, budget, examined, False)
