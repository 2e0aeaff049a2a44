"""How much should an agent spend on schooling, and can the median earner afford it?

With mean skill equal to ``ln I`` the optimal outlay is
``I = (A c exp(c**2 sigma**2 / 2)) ** (1 / (1 - c))``. As ``c`` approaches
one the outlay explodes, and past a threshold it exceeds the median wage:
most agents then lose money ex post even though the investment is
ex-ante optimal.
"""

from edurace import Economy, SimulationConfig, SkillDistribution, Technology
from edurace.investment import gap_sign_boundary, median_gap, solve_log_form
from edurace.montecarlo import expost_loss_fraction

sigma = 1.0
boundary = gap_sign_boundary(sigma)
print(f"median income falls below optimal investment once c > {boundary:.4f}\n")

print(f"{'c':>5} {'investment':>11} {'median-I':>10} {'loss share':>11} {'simulated':>10}")
for c in (0.2, 0.5, 0.7, 0.8, 0.9, 0.95):
    econ = Economy(Technology.from_level(1.0, c), SkillDistribution(0.0, sigma))
    inv = solve_log_form(econ).investment
    loss = expost_loss_fraction(econ, inv, SimulationConfig(n=200_000, seed=1))
    print(f"{c:5.2f} {inv:11.4f} {median_gap(econ):10.4f} {loss.analytic:11.4f} {loss.simulated:10.4f}")

econ = Economy(Technology.from_level(1.0, 1.05), SkillDistribution(0.0, sigma))
print(f"\nc = 1.05: {solve_log_form(econ).regime.value} (spend everything you can borrow)")
