"""Averaging a dominated measure along the dynamics.

A 2-cycle plus a fixed point. The measure (1/2, 0, 1/2) is dominated but not
invariant; its Cesaro averages settle on an invariant measure that is still
dominated and agrees with it on invariant events.
"""

# %%
from ergocap.credal import core_membership
from ergocap.dynamics import (cesaro_average, cesaro_invariantize,
                              invariant_events, is_invariant_measure)
from ergocap.fixtures import fixture
from ergocap.measure import Measure, states_of

inst = fixture("S2")
sys, cap = inst.system, inst.capacity
P = Measure(("1/2", "0", "1/2"))
print("P in core:", core_membership(cap, P), " invariant:", is_invariant_measure(sys, P))

# %% [markdown]
# Finite-horizon averages. Odd horizons are off by a little; every even
# horizon already hits the limit, since the only cycle longer than 1 has length 2.

# %%
for h in (1, 2, 3, 5, 10, 101):
    print(f"h={h:>4}", cesaro_average(sys, P, h).to_strings())

# %%
Q = cesaro_invariantize(sys, P)
print("closed form:", Q.to_strings())
print("invariant:", is_invariant_measure(sys, Q), " in core:", core_membership(cap, Q))
for A in invariant_events(sys):
    print(f"  {states_of(A)}: P = {P(A)}, P' = {Q(A)}")
