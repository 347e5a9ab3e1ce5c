import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergocap.credal import (core_membership, core_vertices,
                            is_ergodic_capacity, is_invariant_capacity,
                            theta0_vertices, theta_star)
from ergocap.dynamics import (analyze, identity_system,
                              invariant_events, is_invariant_measure)
from ergocap.errors import HypothesisUnmet, InputError
from ergocap.fixtures import fixture
from ergocap.generate import generate_instance, random_convex_combination
from ergocap.measure import event, full_event, mixture
from ergocap.theorems import (Status, bound_report, check_ac_closure,
                              check_bound_comparison, check_decomposition,
                              check_ergodic_bound, check_invariantization,
                              check_structure, check_zero_one,
                              ergodic_decomposition, zero_one_witness)

from conftest import RV, M, envelope, random_variables

HOLDS, VIOLATED, UNMET = Status.HOLDS, Status.VIOLATED, Status.HYPOTHESIS_UNMET


@st.composite
def ergodic_instances(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(1, 4))
    seed = draw(st.integers(0, 2**32))
    inst = generate_instance(n, k, seed, kind="ergodic")
    return inst.system, inst.capacity


class TestInvariantization:
    def test_point_mass_outside_core_is_rejected(self, s1):
        sys, cap = s1
        with pytest.raises(InputError, match="not in the core"):
            check_invariantization(sys, cap, M(1, 0, 0, 0))
        # mixed pairs are capped at 1/2, so this one is outside as well
        with pytest.raises(InputError):
            check_invariantization(sys, cap, M("1/2", 0, "1/2", 0))

    def test_non_invariant_core_member(self, s2):
        sys, cap = s2
        P = M("1/2", 0, "1/2")
        assert core_membership(cap, P) and not is_invariant_measure(sys, P)
        assert check_invariantization(sys, cap, P).status is HOLDS

    def test_invariant_member_is_fixed(self, s1):
        sys, cap = s1
        assert check_invariantization(sys, cap, M("1/4", "1/4", "1/4", "1/4")).status is HOLDS

    def test_needs_invariant_capacity(self):
        inst = fixture("noninvariant")
        v = check_invariantization(inst.system, inst.capacity, M(0, 0, "1/2", "1/2"))
        assert v.status is UNMET and "not invariant" in v.reason
        assert not v


class TestZeroOne:
    def test_examples(self, s1):
        sys, cap = s1
        assert zero_one_witness(sys, cap, event([0, 1])) == M("1/2", "1/2", 0, 0)
        assert zero_one_witness(sys, cap, event([2, 3])) == M(0, 0, "1/2", "1/2")
        assert zero_one_witness(sys, cap, full_event(4)) in theta_star(cap, sys)
        assert check_zero_one(sys, cap, event([0, 1])).status is HOLDS

    def test_bad_events(self, s1):
        sys, cap = s1
        with pytest.raises(InputError, match="not invariant"):
            zero_one_witness(sys, cap, event([0]))
        one_sided = envelope(M(1, 0))
        with pytest.raises(InputError, match="= 0"):
            zero_one_witness(identity_system(2), one_sided, event([1]))

    def test_hypotheses(self, nonergodic):
        sys, cap = nonergodic
        with pytest.raises(HypothesisUnmet):
            zero_one_witness(sys, cap, event([0]))
        assert check_zero_one(sys, cap, event([0])).status is UNMET
        diag = check_zero_one(sys, cap, event([0]), diagnostic=True)
        assert diag.status is VIOLATED and diag.diagnostic
        assert not diag.counts_as_violation


class TestAcClosure:
    def test_examples(self, s1):
        assert check_ac_closure(*s1).status is HOLDS
        inst = fixture("three-cycle")
        assert check_ac_closure(inst.system, inst.capacity).status is HOLDS

    def test_necessity_witness(self, nonergodic):
        sys, cap = nonergodic
        assert check_ac_closure(sys, cap).status is UNMET
        v = check_ac_closure(sys, cap, diagnostic=True)
        assert v.status is VIOLATED and v.diagnostic
        assert v.witness["ergodic"] == ["1", "0"]
        assert v.witness["dominating"] == ["1/2", "1/2"]


class TestStructure:
    def test_examples(self, s1):
        assert check_structure(*s1).status is HOLDS
        inst = fixture("point-masses")
        assert check_structure(inst.system, inst.capacity).status is HOLDS
        assert set(theta0_vertices(inst.capacity, inst.system)) == {M(1, 0), M(0, 1)}

    def test_necessity_witness(self, nonergodic):
        sys, cap = nonergodic
        assert check_structure(sys, cap).status is UNMET
        v = check_structure(sys, cap, diagnostic=True)
        assert v.status is VIOLATED and v.diagnostic
        assert v.witness == {"theta0_vertices": [["1/2", "1/2"]], "theta_star": []}


class TestDecomposition:
    def test_examples(self, s1):
        sys, cap = s1
        d = ergodic_decomposition(sys, cap, M("1/4", "1/4", "1/4", "1/4"))
        assert d.weights == (Fraction(1, 2), Fraction(1, 2))
        assert d.components == (M("1/2", "1/2", 0, 0), M(0, 0, "1/2", "1/2"))
        assert d.atoms == (event([0, 1]), event([2, 3]))

    def test_single_atom(self, s1):
        sys, cap = s1
        P = M("1/2", "1/2", 0, 0)
        d = ergodic_decomposition(sys, cap, P)
        assert d.weights == (1,) and d.components == (P,)
        inst = fixture("three-cycle")
        U = M("1/3", "1/3", "1/3")
        d = ergodic_decomposition(inst.system, inst.capacity, U)
        assert d.atoms == (full_event(3),) and d.components == (U,)

    def test_errors(self, s2, nonergodic):
        with pytest.raises(InputError, match="not invariant"):
            ergodic_decomposition(*s2, M("1/2", 0, "1/2"))
        with pytest.raises(InputError, match="not in the core"):
            ergodic_decomposition(*nonergodic, M(1, 0))

    @settings(max_examples=60)
    @given(ergodic_instances(), st.integers(0, 1000))
    def test_reconstructs_every_event(self, inst, seed):
        sys, cap = inst
        rng = random.Random(seed)
        members = list(theta0_vertices(cap, sys))
        members.append(random_convex_combination(rng, members))
        for P in members:
            d = ergodic_decomposition(sys, cap, P)
            assert sum(d.weights) == 1 and all(w > 0 for w in d.weights)
            for Q in d.components:
                assert is_invariant_measure(sys, Q)
                assert Q in theta_star(cap, sys)
            for A in range(1 << sys.n):
                assert sum(w * Q(A) for w, Q in zip(d.weights, d.components)) == P(A)
            assert check_decomposition(sys, cap, P).status is HOLDS


class TestBounds:
    def test_unit_at_state_zero(self, s1):
        sys, cap = s1
        xi = RV(1, 0, 0, 0)
        rep = bound_report(sys, cap, xi)
        assert (rep.upper, rep.lower) == (Fraction(1, 2), 0)
        assert rep.xi_star == RV("1/2", "1/2", 0, 0)
        assert rep.choquet_xi_star == rep.choquet_xi == Fraction(1, 2)
        assert rep.per_component_limits == (Fraction(1, 2), 0)
        assert check_ergodic_bound(sys, cap, xi).status is HOLDS

    def test_alternating(self, s1):
        sys, cap = s1
        rep = bound_report(sys, cap, RV(1, 0, 1, 0))
        assert rep.xi_star == RV(*["1/2"] * 4)
        assert rep.upper == rep.lower == Fraction(1, 2)

    def test_constant(self, s1):
        rep = bound_report(*s1, RV(-3, -3, -3, -3))
        assert rep.upper == rep.lower == rep.choquet_xi == rep.choquet_xi_star == -3
        assert set(rep.xi_star) == {-3}

    def test_strict_gap_over_the_core(self):
        # same generators as the pinned search witness, with every measure invariant
        cap = fixture("non-two-alternating").capacity
        rep = bound_report(identity_system(4), cap, RV(1, 2, 0, 1))
        assert rep.core_upper == Fraction(4, 3) < rep.choquet_xi == Fraction(7, 5)

    def test_empty_theta0(self):
        inst = fixture("non-two-alternating")
        with pytest.raises(HypothesisUnmet):
            bound_report(inst.system, inst.capacity, RV(1, 2, 0, 1))

    def test_nonergodic_diagnostic(self, nonergodic):
        sys, cap = nonergodic
        xi = RV(1, 0)
        assert check_ergodic_bound(sys, cap, xi).status is UNMET
        v = check_ergodic_bound(sys, cap, xi, diagnostic=True)
        # the time mean at state 0 is 1 but both bounds equal 1/2
        assert v.status is VIOLATED and v.witness == {"state": 0, "limit": "1"}

    @settings(max_examples=80)
    @given(ergodic_instances().flatmap(
        lambda inst: st.tuples(st.just(inst), random_variables(inst[0].n))))
    def test_sandwich_and_equality(self, pair):
        (sys, cap), xi = pair
        assert is_invariant_capacity(cap, sys) and is_ergodic_capacity(cap, sys)
        rep = bound_report(sys, cap, xi)
        charged = [w for w in range(sys.n) if cap(1 << w) > 0]
        assert rep.lower <= min(rep.xi_star[w] for w in charged)
        assert max(rep.xi_star[w] for w in charged) <= rep.upper
        assert rep.upper == rep.choquet_xi_star
        assert rep.core_upper <= rep.choquet_xi
        # largest time-mean limit over components that V does not ignore
        comps = [c for c in analyze(sys).components if cap(event(c)) == 1]
        assert rep.upper == max(rep.xi_star[c[0]] for c in comps)
        assert check_ergodic_bound(sys, cap, xi).status is HOLDS
        assert check_bound_comparison(sys, cap, xi).status is HOLDS


class TestErgodicCorpusProperties:
    @settings(max_examples=80)
    @given(ergodic_instances(), st.integers(0, 1000))
    def test_theorems_hold(self, inst, seed):
        sys, cap = inst
        erg = theta_star(cap, sys)
        assert erg
        assert set(theta0_vertices(cap, sys)) == set(erg)
        assert check_structure(sys, cap).status is HOLDS
        assert check_ac_closure(sys, cap).status is HOLDS
        for A in invariant_events(sys):
            if cap(A) > 0:
                Q = zero_one_witness(sys, cap, A)
                assert Q(A) == 1 and core_membership(cap, Q) and is_invariant_measure(sys, Q)
        for P in core_vertices(cap):
            assert check_invariantization(sys, cap, P).status is HOLDS
        # convex combinations of ergodic members stay invariant and dominated
        rng = random.Random(seed)
        P = random_convex_combination(rng, erg)
        assert core_membership(cap, P) and is_invariant_measure(sys, P)

    def test_mixture_of_theta_star(self, s1):
        sys, cap = s1
        P = mixture([Fraction(1, 3), Fraction(2, 3)], list(theta_star(cap, sys)))
        assert P == M("1/3", "1/3", "1/6", "1/6")
        d = ergodic_decomposition(sys, cap, P)
        assert d.weights == (Fraction(2, 3), Fraction(1, 3))
