from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ergocap.credal import Capacity
from ergocap.dynamics import FiniteSystem
from ergocap.fixtures import fixture
from ergocap.measure import Measure, RandomVariable

settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")

GOLDEN = Path(__file__).parent / "golden"


def M(*xs):
    return Measure(tuple(Fraction(x) for x in xs))


def RV(*xs):
    return RandomVariable(tuple(Fraction(x) for x in xs))


def envelope(*measures):
    return Capacity(tuple(measures))


@pytest.fixture
def s1():
    inst = fixture("S1")
    return inst.system, inst.capacity


@pytest.fixture
def s2():
    inst = fixture("S2")
    return inst.system, inst.capacity


@pytest.fixture
def nonergodic():
    inst = fixture("nonergodic")
    return inst.system, inst.capacity


# -- hypothesis strategies -------------------------------------------------

@st.composite
def measures(draw, n, max_den=12):
    weights = draw(st.lists(st.integers(0, max_den), min_size=n, max_size=n)
                   .filter(lambda w: sum(w) > 0))
    total = sum(weights)
    return Measure(tuple(Fraction(w, total) for w in weights))


@st.composite
def systems(draw, n):
    return FiniteSystem(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))


@st.composite
def random_variables(draw, n):
    vals = draw(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=8),
                         min_size=n, max_size=n))
    return RandomVariable(tuple(vals))


@st.composite
def instances(draw, max_states=5, max_generators=3):
    n = draw(st.integers(1, max_states))
    sys = draw(systems(n))
    k = draw(st.integers(1, max_generators))
    gens = tuple(draw(measures(n)) for _ in range(k))
    return sys, Capacity(gens)
