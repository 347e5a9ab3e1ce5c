"""Run every applicable checker on one instance and assemble the JSON report."""

from __future__ import annotations

import random
from typing import Iterable, Optional

from .credal import (core_vertices, generators_span_core, is_ergodic_capacity,
                     is_invariant_capacity, theta0_vertices, theta_star)
from .dynamics import analyze, invariant_events
from .generate import derive_seed, random_variable
from .io import Instance
from .measure import RandomVariable, format_rational, states_of
from .theorems import (BoundReport, Status, Verdict, check_ac_closure,
                       check_bound_comparison, check_decomposition,
                       check_ergodic_bound, check_invariantization,
                       check_structure, check_zero_one, hypothesis_gap)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_UNMET = 3

REPORT_KEYS = ("instance", "invariant", "ergodic", "components", "cycles", "core_vertices",
               "theta0_vertices", "theta_star", "checks", "bounds")


def _verdict_dict(v: Verdict, subject) -> dict:
    return {
        "check": v.check,
        "subject": subject,
        "status": v.status.value,
        "diagnostic": v.diagnostic,
        "reason": v.reason,
        "witness": v.witness,
    }


def _bound_dict(xi: RandomVariable, rep: BoundReport) -> dict:
    f = format_rational
    return {
        "xi": xi.to_strings(),
        "upper": f(rep.upper),
        "lower": f(rep.lower),
        "choquet_xi_star": f(rep.choquet_xi_star),
        "choquet_xi": f(rep.choquet_xi),
        "core_upper": f(rep.core_upper),
        "xi_star": rep.xi_star.to_strings(),
        "per_component_limits": [f(q) for q in rep.per_component_limits],
    }


def default_random_variables(inst: Instance, seed: int = 0, count: int = 5) -> list[RandomVariable]:
    rng = random.Random(derive_seed(seed, 0))
    return [random_variable(rng, inst.n) for _ in range(count)]


def exit_code(verdicts: Iterable[Verdict]) -> int:
    verdicts = list(verdicts)
    if any(v.counts_as_violation for v in verdicts):
        return EXIT_VIOLATION
    if all(v.status is Status.HOLDS and not v.diagnostic for v in verdicts):
        return EXIT_OK
    return EXIT_UNMET


def run_suite(inst: Instance, rvs: Optional[list[RandomVariable]] = None,
              diagnostic: bool = False, seed: int = 0, num_rvs: int = 5) -> tuple[dict, int]:
    """Analyze ``inst``, run all checkers, and return ``(report, exit_code)``."""
    sys, cap = inst.system, inst.capacity
    if rvs is None:
        rvs = default_random_variables(inst, seed, num_rvs)
    st = analyze(sys)
    inv = is_invariant_capacity(cap, sys)
    erg = is_ergodic_capacity(cap, sys)
    core = core_vertices(cap)
    t0 = theta0_vertices(cap, sys)
    ts = theta_star(cap, sys)

    summary = inst.to_dict()
    summary["generators_span_core"] = generators_span_core(cap)

    verdicts: list[tuple[Verdict, object]] = []
    for P in core:
        verdicts.append((check_invariantization(sys, cap, P, diagnostic), P.to_strings()))
    for A in invariant_events(sys):
        if cap(A) > 0:
            verdicts.append((check_zero_one(sys, cap, A, diagnostic), states_of(A)))
    verdicts.append((check_ac_closure(sys, cap, diagnostic), None))
    verdicts.append((check_structure(sys, cap, diagnostic), None))
    for P in t0:
        verdicts.append((check_decomposition(sys, cap, P), P.to_strings()))

    bounds = []
    hypotheses_ok = hypothesis_gap(sys, cap) is None
    for xi in rvs:
        vb = check_ergodic_bound(sys, cap, xi, diagnostic)
        vc = check_bound_comparison(sys, cap, xi, diagnostic)
        verdicts.append((vb, xi.to_strings()))
        verdicts.append((vc, xi.to_strings()))
        rep = vb.report or vc.report
        if rep is not None and (hypotheses_ok or diagnostic):
            bounds.append(_bound_dict(xi, rep))

    report = {
        "instance": summary,
        "invariant": {"holds": inv.holds, "witness": None if inv else states_of(inv.witness)},
        "ergodic": {"holds": erg.holds, "witness": None if erg else states_of(erg.witness)},
        "components": [list(c) for c in st.components],
        "cycles": [list(c) for c in st.cycles],
        "core_vertices": [P.to_strings() for P in core],
        "theta0_vertices": [P.to_strings() for P in t0],
        "theta_star": [P.to_strings() for P in ts],
        "checks": [_verdict_dict(v, subject) for v, subject in verdicts],
        "bounds": bounds,
    }
    return report, exit_code(v for v, _ in verdicts)
