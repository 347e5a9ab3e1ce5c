"""Exact computations with ergodic upper probabilities on finite dynamical systems."""

from .credal import (Capacity, CredalCore, Witnessed, capacity_from_generators,
                     choquet_integral, core_membership, core_vertices,
                     credal_core, is_ergodic_capacity, is_invariant_capacity,
                     is_two_alternating, theta0_vertices, theta_star)
from .dynamics import (FiniteSystem, InvariantStructure, analyze,
                       birkhoff_average, birkhoff_limit,
                       birkhoff_limit_function, cesaro_invariantize,
                       is_invariant_set, preimage, pushforward)
from .errors import (ConditioningError, ErgocapError, HypothesisUnmet,
                     InputError, ResourceError, TheoremViolation)
from .io import Instance, emit_instance, parse_instance
from .measure import (Measure, RandomVariable, SignedMeasure,
                      conditional_measure, event, expectation,
                      hahn_decomposition, states_of, upper_expectation)
from .theorems import (BoundReport, DecompositionResult, Status, Verdict,
                       bound_report, check_ac_closure, check_bound_comparison,
                       check_ergodic_bound, check_invariantization,
                       check_structure, ergodic_decomposition,
                       zero_one_witness)

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "birkhoff_average",
    "birkhoff_limit",
    "birkhoff_limit_function",
    "bound_report",
    "BoundReport",
    "Capacity",
    "capacity_from_generators",
    "cesaro_invariantize",
    "check_ac_closure",
    "check_bound_comparison",
    "check_ergodic_bound",
    "check_invariantization",
    "check_structure",
    "choquet_integral",
    "conditional_measure",
    "ConditioningError",
    "core_membership",
    "core_vertices",
    "credal_core",
    "CredalCore",
    "DecompositionResult",
    "emit_instance",
    "ErgocapError",
    "ergodic_decomposition",
    "event",
    "expectation",
    "FiniteSystem",
    "hahn_decomposition",
    "HypothesisUnmet",
    "InputError",
    "Instance",
    "InvariantStructure",
    "is_ergodic_capacity",
    "is_invariant_capacity",
    "is_invariant_set",
    "is_two_alternating",
    "Measure",
    "parse_instance",
    "preimage",
    "pushforward",
    "RandomVariable",
    "ResourceError",
    "SignedMeasure",
    "states_of",
    "Status",
    "TheoremViolation",
    "theta0_vertices",
    "theta_star",
    "upper_expectation",
    "Verdict",
    "Witnessed",
    "zero_one_witness",
]
