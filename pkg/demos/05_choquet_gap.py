"""Where the Choquet integral overshoots the core.

When V fails to be 2-alternating on a pair (A, B), the gamble 1_A + 1_B has
Choquet integral V(A | B) + V(A & B), which beats every P(A) + P(B) over
the core. The seeded search finds such an instance in two draws.
"""

# %%
from ergocap.credal import (choquet_integral, core_vertices,
                            is_two_alternating, lp_upper_expectation)
from ergocap.generate import search
from ergocap.measure import indicator, states_of, upper_expectation

res = search("choquet-gap", budget=10_000, seed=0)
cap = res.instance.capacity
print("found at index", res.index, "map", res.instance.system.map)
for P in cap.generators:
    print("  generator", P.to_strings())

# %%
A, B = is_two_alternating(cap).witness
print("pair", states_of(A), states_of(B))
print("V(A|B) + V(A&B) =", cap(A | B) + cap(A & B), " V(A) + V(B) =", cap(A) + cap(B))

# %%
xi = indicator(cap.n, A) + indicator(cap.n, B)
verts = core_vertices(cap)
print(len(verts), "core vertices")
print("sup over core:", upper_expectation(verts, xi), "(LP:", lp_upper_expectation(cap, xi), ")")
print("Choquet:      ", choquet_integral(cap, xi))
