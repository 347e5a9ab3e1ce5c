"""Checkers for the structure results on ergodic upper probabilities.

Every checker works on a concrete finite instance ``(sys, cap)`` and
returns a three-valued :class:`Verdict`: the conclusion HOLDS, is VIOLATED
(with a witness), or the instance does not meet the HYPOTHESES of the
result. ``diagnostic=True`` evaluates the conclusion even when the
hypotheses fail; such verdicts carry ``diagnostic=True`` and are how the
necessity of a hypothesis is demonstrated.

Almost-sure statements "for every P in the core" are checked pointwise on the
states ``w`` with ``V({w}) > 0``. This is equivalent: a dominated ``P`` has
``P({w}) <= V({w}) = 0`` on every other state.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .credal import (Capacity, core_membership, core_vertices, core_violation,
                     choquet_integral, is_ergodic_capacity,
                     is_invariant_capacity, theta0_vertices, theta_star)
from .dynamics import (FiniteSystem, analyze, birkhoff_limit_function,
                       cesaro_invariantize, invariant_events,
                       is_invariant_measure, is_invariant_set)
from .errors import HypothesisUnmet, InputError, TheoremViolation
from .measure import (Event, Measure, RandomVariable, conditional_measure,
                      expectation, mixture, states_of, uniform,
                      upper_expectation)


class Status(str, enum.Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"
    HYPOTHESIS_UNMET = "HYPOTHESIS-UNMET"


@dataclass
class Verdict:
    check: str
    status: Status
    witness: Any = None
    reason: str = ""
    diagnostic: bool = False
    report: Optional["BoundReport"] = None

    def __bool__(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def counts_as_violation(self) -> bool:
        return self.status is Status.VIOLATED and not self.diagnostic


@dataclass(frozen=True)
class DecompositionResult:
    weights: tuple[Fraction, ...]
    components: tuple[Measure, ...]
    atoms: tuple[Event, ...]

    def recombine(self) -> Measure:
        return mixture(self.weights, self.components)


@dataclass(frozen=True)
class BoundReport:
    upper: Fraction
    lower: Fraction
    choquet_xi_star: Fraction
    choquet_xi: Fraction
    core_upper: Fraction
    xi_star: RandomVariable
    per_component_limits: tuple[Fraction, ...]


def hypothesis_gap(sys: FiniteSystem, cap: Capacity, ergodic: bool = True) -> Optional[str]:
    """Why ``cap`` fails the invariance (and ergodicity) hypotheses, or None."""
    inv = is_invariant_capacity(cap, sys)
    if not inv:
        return f"capacity not invariant: V(T^-1 A) != V(A) for A={states_of(inv.witness)}"
    if ergodic:
        erg = is_ergodic_capacity(cap, sys)
        if not erg:
            A = erg.witness
            return f"capacity not ergodic: V({states_of(A)}) = {cap(A)}"
    return None


def _start(name: str, sys, cap, ergodic: bool, diagnostic: bool) -> Optional[Verdict]:
    """Return an early HYPOTHESIS-UNMET verdict, or None to proceed."""
    if cap.n != sys.n:
        raise InputError(f"capacity has {cap.n} states, system has {sys.n}")
    gap = hypothesis_gap(sys, cap, ergodic)
    if gap is not None and not diagnostic:
        return Verdict(name, Status.HYPOTHESIS_UNMET, reason=gap)
    return None


def _finish(name: str, sys, cap, ergodic: bool, diagnostic: bool,
            witness=None, reason: str = "", report=None) -> Verdict:
    status = Status.HOLDS if witness is None else Status.VIOLATED
    is_diag = diagnostic and hypothesis_gap(sys, cap, ergodic) is not None
    if is_diag:
        reason = f"diagnostic run, hypotheses unmet ({hypothesis_gap(sys, cap, ergodic)})" + (
            f"; {reason}" if reason else "")
    return Verdict(name, status, witness=witness, reason=reason, diagnostic=is_diag, report=report)


# -- invariantization -----------------------------------------------------

def check_invariantization(sys: FiniteSystem, cap: Capacity, P: Measure,
                           diagnostic: bool = False) -> Verdict:
    """Cesaro invariantization of a core member stays in the core and matches it on invariant events."""
    name = "invariantization"
    if not core_membership(cap, P):
        A = core_violation(cap, P)
        raise InputError(f"P is not in the core: P({states_of(A)}) = {P(A)} > V = {cap(A)}")
    early = _start(name, sys, cap, False, diagnostic)
    if early is not None:
        return early
    Q = cesaro_invariantize(sys, P)
    if not is_invariant_measure(sys, Q):
        return _finish(name, sys, cap, False, diagnostic, {"P'": Q.to_strings()}, "P' not invariant")
    A = core_violation(cap, Q)
    if A is not None:
        return _finish(name, sys, cap, False, diagnostic, {"event": states_of(A)}, "P' not dominated")
    for A in invariant_events(sys):
        if Q(A) != P(A):
            return _finish(name, sys, cap, False, diagnostic, {"event": states_of(A)},
                           "P' and P differ on an invariant event")
    return _finish(name, sys, cap, False, diagnostic)


# -- zero-one witnesses and absolute continuity ---------------------------

def _carried_cycle_measure(sys: FiniteSystem, cap: Capacity, A: Event) -> Optional[Measure]:
    st = analyze(sys)
    for cyc_event, cyc in zip(st.cycle_events, st.cycles):
        if cyc_event & ~A:
            continue
        Q = uniform(sys.n, cyc)
        if core_membership(cap, Q):
            return Q
    return None


def zero_one_witness(sys: FiniteSystem, cap: Capacity, A: Event) -> Measure:
    """An invariant core member giving full mass to the invariant event ``A``."""
    if not is_invariant_set(sys, A):
        raise InputError(f"event {states_of(A)} is not invariant")
    if cap(A) == 0:
        raise InputError(f"V({states_of(A)}) = 0")
    gap = hypothesis_gap(sys, cap)
    if gap is not None:
        raise HypothesisUnmet(gap)
    Q = _carried_cycle_measure(sys, cap, A)
    if Q is None:
        raise TheoremViolation(f"no invariant core member is carried by {states_of(A)}")
    return Q


def check_zero_one(sys: FiniteSystem, cap: Capacity, A: Event, diagnostic: bool = False) -> Verdict:
    name = "zero_one_witness"
    if not is_invariant_set(sys, A):
        raise InputError(f"event {states_of(A)} is not invariant")
    if cap(A) == 0:
        raise InputError(f"V({states_of(A)}) = 0")
    early = _start(name, sys, cap, True, diagnostic)
    if early is not None:
        return early
    Q = _carried_cycle_measure(sys, cap, A)
    if Q is None:
        return _finish(name, sys, cap, True, diagnostic, {"event": states_of(A)},
                       f"no invariant core member is carried by {states_of(A)}")
    return _finish(name, sys, cap, True, diagnostic, reason=f"P' = {Q.to_strings()}")


def check_ac_closure(sys: FiniteSystem, cap: Capacity, diagnostic: bool = False) -> Verdict:
    """Each ergodic measure absolutely continuous w.r.t. some invariant core member lies in the core."""
    name = "ac_closure"
    early = _start(name, sys, cap, True, diagnostic)
    if early is not None:
        return early
    st = analyze(sys)
    verts = theta0_vertices(cap, sys)
    for cyc_event, cyc in zip(st.cycle_events, st.cycles):
        dominating = next((P for P in verts if P(cyc_event) > 0), None)
        if dominating is None:
            continue
        U = uniform(sys.n, cyc)
        A = core_violation(cap, U)
        if A is not None:
            return _finish(name, sys, cap, True, diagnostic,
                           {"ergodic": U.to_strings(), "dominating": dominating.to_strings(),
                            "event": states_of(A)},
                           f"uniform measure on cycle {list(cyc)} is not dominated by V")
    return _finish(name, sys, cap, True, diagnostic)


# -- structure ------------------------------------------------------------

def check_structure(sys: FiniteSystem, cap: Capacity, diagnostic: bool = False) -> Verdict:
    """The ergodic members are finitely many, at least one, and exactly the vertices of the invariant core."""
    name = "structure"
    early = _start(name, sys, cap, True, diagnostic)
    if early is not None:
        return early
    erg = set(theta_star(cap, sys))
    verts = set(theta0_vertices(cap, sys))
    if not erg:
        return _finish(name, sys, cap, True, diagnostic,
                       {"theta0_vertices": [v.to_strings() for v in sorted(verts)], "theta_star": []},
                       "no ergodic member in the core")
    if erg != verts:
        return _finish(name, sys, cap, True, diagnostic,
                       {"theta0_only": [v.to_strings() for v in sorted(verts - erg)],
                        "theta_star_only": [v.to_strings() for v in sorted(erg - verts)]},
                       "invariant core vertices differ from the ergodic members")
    return _finish(name, sys, cap, True, diagnostic)


def ergodic_decomposition(sys: FiniteSystem, cap: Capacity, P: Measure) -> DecompositionResult:
    """Split an invariant core member into its ergodic parts, one per charged component."""
    if not is_invariant_measure(sys, P):
        raise InputError("P is not invariant")
    if not core_membership(cap, P):
        raise InputError("P is not in the core")
    st = analyze(sys)
    ergodic_cap = hypothesis_gap(sys, cap) is None
    members = set(theta_star(cap, sys)) if ergodic_cap else set()
    weights, comps, atoms = [], [], []
    for B, cyc in zip(st.component_events, st.cycles):
        w = P(B)
        if w == 0:
            continue
        Pk = conditional_measure(P, B)
        if Pk != uniform(sys.n, cyc):
            raise TheoremViolation(f"conditional on {states_of(B)} is not uniform on its cycle")
        if ergodic_cap and Pk not in members:
            raise TheoremViolation(f"ergodic part on {states_of(B)} is not in the core")
        weights.append(w)
        comps.append(Pk)
        atoms.append(B)
    return DecompositionResult(tuple(weights), tuple(comps), tuple(atoms))


def check_decomposition(sys: FiniteSystem, cap: Capacity, P: Measure) -> Verdict:
    name = "ergodic_decomposition"
    try:
        d = ergodic_decomposition(sys, cap, P)
    except TheoremViolation as exc:
        return Verdict(name, Status.VIOLATED, witness={"P": P.to_strings()}, reason=str(exc))
    if d.recombine() != P:
        return Verdict(name, Status.VIOLATED, witness={"P": P.to_strings()},
                       reason="weights and components do not reconstruct P")
    return Verdict(name, Status.HOLDS)


# -- ergodic bounds -------------------------------------------------------

def bound_report(sys: FiniteSystem, cap: Capacity, xi: RandomVariable) -> BoundReport:
    """Upper expectation over the invariant core next to the Choquet integrals, for one ``xi``."""
    if len(xi) != sys.n:
        raise InputError(f"random variable has {len(xi)} values, system has {sys.n} states")
    verts = theta0_vertices(cap, sys)
    if not verts:
        raise HypothesisUnmet("the invariant core is empty")
    st = analyze(sys)
    xi_star = birkhoff_limit_function(sys, xi)
    return BoundReport(
        upper=upper_expectation(verts, xi),
        lower=-upper_expectation(verts, -xi),
        choquet_xi_star=choquet_integral(cap, xi_star),
        choquet_xi=choquet_integral(cap, xi),
        core_upper=upper_expectation(core_vertices(cap), xi),
        xi_star=xi_star,
        per_component_limits=tuple(xi_star[c[0]] for c in st.components),
    )


def check_ergodic_bound(sys: FiniteSystem, cap: Capacity, xi: RandomVariable,
                        diagnostic: bool = False) -> Verdict:
    """Time-mean limits lie between the lower and upper expectations over the invariant core.

    Also confirms the conditional expectation formula: for every invariant
    core vertex ``P`` and every component ``D`` it charges, ``E_P[xi | D]`` equals
    ``E_Q[xi]`` for the ergodic ``Q`` carried by ``D``, which is also the
    time-mean limit on ``D``.
    """
    name = "ergodic_bound"
    early = _start(name, sys, cap, True, diagnostic)
    if early is not None:
        return early
    try:
        rep = bound_report(sys, cap, xi)
    except HypothesisUnmet as exc:
        return _finish(name, sys, cap, True, diagnostic, {"reason": str(exc)}, str(exc))
    if rep.lower > rep.upper:
        return _finish(name, sys, cap, True, diagnostic, {"lower": str(rep.lower), "upper": str(rep.upper)},
                       "lower bound exceeds upper bound", rep)
    for w in range(sys.n):
        if cap(1 << w) > 0 and not rep.lower <= rep.xi_star[w] <= rep.upper:
            return _finish(name, sys, cap, True, diagnostic,
                           {"state": w, "limit": str(rep.xi_star[w])},
                           "time-mean limit outside the bounds", rep)
    st = analyze(sys)
    erg = theta_star(cap, sys)
    for P in theta0_vertices(cap, sys):
        for D in st.component_events:
            if P(D) == 0:
                continue
            carried = [Q for Q in erg if Q(D) == 1]
            if not carried:
                return _finish(name, sys, cap, True, diagnostic,
                               {"P": P.to_strings(), "atom": states_of(D)},
                               "no ergodic member carried by a charged atom", rep)
            cond = expectation(conditional_measure(P, D), xi)
            target = expectation(carried[0], xi)
            if cond != target or rep.xi_star[states_of(D)[0]] != target:
                return _finish(name, sys, cap, True, diagnostic,
                               {"P": P.to_strings(), "atom": states_of(D),
                                "conditional": str(cond), "ergodic": str(target)},
                               "conditional expectation formula fails", rep)
    return _finish(name, sys, cap, True, diagnostic, report=rep)


def check_bound_comparison(sys: FiniteSystem, cap: Capacity, xi: RandomVariable,
                           diagnostic: bool = False) -> Verdict:
    """Compare the invariant-core upper expectation with the Choquet integrals.

    Always ``upper(xi) <= choquet(xi_star)`` and ``sup_core E_P[xi] <= choquet(xi)``. In a
    finite deterministic system with an ergodic invariant ``V`` the first is
    an equality: ``xi_star`` is constant on components, ``V`` is 0 or 1 on their
    unions, so both sides equal the largest cycle mean over the charged
    components.
    """
    name = "bound_comparison"
    early = _start(name, sys, cap, True, diagnostic)
    if early is not None:
        return early
    try:
        rep = bound_report(sys, cap, xi)
    except HypothesisUnmet as exc:
        return _finish(name, sys, cap, True, diagnostic, {"reason": str(exc)}, str(exc))
    if rep.upper > rep.choquet_xi_star:
        return _finish(name, sys, cap, True, diagnostic,
                       {"upper": str(rep.upper), "choquet_xi_star": str(rep.choquet_xi_star)},
                       "upper expectation exceeds the Choquet integral of the limit", rep)
    if rep.core_upper > rep.choquet_xi:
        return _finish(name, sys, cap, True, diagnostic,
                       {"core_upper": str(rep.core_upper), "choquet_xi": str(rep.choquet_xi)},
                       "core upper expectation exceeds the Choquet integral", rep)
    if rep.upper != rep.choquet_xi_star:
        return _finish(name, sys, cap, True, diagnostic,
                       {"upper": str(rep.upper), "choquet_xi_star": str(rep.choquet_xi_star)},
                       "upper expectation differs from the Choquet integral of the limit", rep)
    return _finish(name, sys, cap, True, diagnostic, report=rep)
