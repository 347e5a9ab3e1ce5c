"""Two 2-cycles and a capacity that puts weight 1/2 on each.

Builds the system, tabulates the upper probability on every event and lists
the extreme points of the dominated set, its invariant part and the ergodic
members.
"""

# %%
from ergocap import (analyze, core_vertices, is_ergodic_capacity,
                     is_invariant_capacity, states_of, theta0_vertices,
                     theta_star)
from ergocap.fixtures import fixture

inst = fixture("S1")
sys, cap = inst.system, inst.capacity
print("map:", sys.map)

# %% [markdown]
# The functional graph splits into weakly connected components, each with one
# cycle. Unions of components are exactly the invariant events.

# %%
st = analyze(sys)
print("components:", st.components, "cycles:", st.cycles, "period:", st.period)

# %%
for A in range(1 << cap.n):
    print(f"V({states_of(A)}) = {cap(A)}")

# %%
print("invariant:", bool(is_invariant_capacity(cap, sys)))
print("ergodic:  ", bool(is_ergodic_capacity(cap, sys)))

# %% [markdown]
# Mixed pairs such as {0, 2} are capped at 1/2, so the core is the segment
# between the two generators.

# %%
for label, verts in [("core", core_vertices(cap)),
                     ("invariant core", theta0_vertices(cap, sys)),
                     ("ergodic members", theta_star(cap, sys))]:
    print(f"{label:>16}:", [P.to_strings() for P in verts])
