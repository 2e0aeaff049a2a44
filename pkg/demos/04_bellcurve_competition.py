"""Rent competition: when part of pay comes from beating others, everyone overinvests.

A share ``1 - alpha`` of an agent's wage depends on skill relative to the
population. Each agent's best response ignores that their spending lowers
everyone else's relative standing, so the symmetric equilibrium spends
``alpha ** (-1 / (1 - alpha c))`` times what a planner would. The same
logic applies to firms racing to train better chatbots.
"""

from edurace import Economy, RentShare, SkillDistribution, Technology
from edurace.bellcurve import (
    iterate_best_response, overinvestment_ratio, private_equilibrium, social_optimum,
)

econ = Economy(Technology.from_level(1.0, 0.5), SkillDistribution(0.0, 1.0))

print(f"{'alpha':>6} {'private':>9} {'planner':>9} {'ratio':>7}")
for alpha in (1.0, 0.9, 0.75, 0.5, 0.25, 0.1):
    rent = RentShare(alpha)
    priv = private_equilibrium(econ, rent).investment
    soc = social_optimum(econ, rent).investment
    print(f"{alpha:6.2f} {priv:9.5f} {soc:9.5f} {overinvestment_ratio(econ, rent):7.3f}")

rent = RentShare(0.5)
print("\nbest-response dynamics from two starting points:")
for start in (0.01, 10.0):
    print(f"  start {start:>5}: converges to {iterate_best_response(econ, rent, start):.10f}")
