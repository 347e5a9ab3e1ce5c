"""Time means against the invariant upper and lower expectations.

For each starting state, Birkhoff averages converge to the mean of the
random variable over the cycle that the orbit falls into. Those limits sit
between the lower and upper expectations over the invariant core.
"""

# %%
from fractions import Fraction

from ergocap.dynamics import birkhoff_average
from ergocap.generate import generate_instance
from ergocap.measure import RandomVariable
from ergocap.theorems import bound_report, check_ergodic_bound

inst = generate_instance(6, 3, 12, kind="ergodic")
sys, cap = inst.system, inst.capacity
xi = RandomVariable(tuple(Fraction(v) for v in ("1", "-1", "1/2", "2", "0", "-3/4")))
print("map:", sys.map)

# %%
rep = bound_report(sys, cap, xi)
print("lower", rep.lower, " upper", rep.upper)
print("limits:", rep.xi_star.to_strings())
print("Choquet of limit", rep.choquet_xi_star, " Choquet of xi", rep.choquet_xi, " sup over core", rep.core_upper)

# %%
for omega in range(sys.n):
    traj = [birkhoff_average(sys, xi, omega, 2 ** p) for p in range(0, 11, 2)]
    print(omega, [str(t) for t in traj], "->", rep.xi_star[omega])

# %%
print(check_ergodic_bound(sys, cap, xi).status.value)
