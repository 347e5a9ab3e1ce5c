"""Extreme points of the invariant core are the ergodic members.

Runs the check over a seeded corpus of invariant, ergodic capacities, then
shows what breaks for a capacity that is invariant but not ergodic.
"""

# %%
from collections import Counter

from ergocap.credal import theta0_vertices, theta_star
from ergocap.fixtures import fixture
from ergocap.generate import ergodic_corpus
from ergocap.theorems import check_ac_closure, check_structure

corpus = ergodic_corpus(50, seed=1)
print(Counter(check_structure(i.system, i.capacity).status.value for i in corpus))

# %%
inst = max(corpus, key=lambda i: len(theta0_vertices(i.capacity, i.system)))
print("largest:", inst.name, "map", inst.system.map)
for P in theta0_vertices(inst.capacity, inst.system):
    print("  ", P.to_strings())

# %% [markdown]
# Identity on two states with the single generator (1/2, 1/2): V is 1/2 on
# the invariant event {0}. Regular runs stop at the hypotheses; diagnostic
# runs evaluate the conclusions anyway.

# %%
ne = fixture("nonergodic")
for check in (check_structure, check_ac_closure):
    plain = check(ne.system, ne.capacity)
    diag = check(ne.system, ne.capacity, diagnostic=True)
    print(f"{check.__name__}: {plain.status.value}; diagnostic {diag.status.value} {diag.witness}")
print("ergodic members:", theta_star(ne.capacity, ne.system))
