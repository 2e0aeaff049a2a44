"""Does more technology make a risk-averse society better off?

Expected CRRA utility peaks at ``c* = mu / ((phi - 1) sigma**2)`` for
``phi > 1``. Comparing the fitted 1975 and 2024 wage curves gives the risk
aversion at which an agent behind the veil of ignorance is indifferent
between the two years.
"""

from edurace import Preference
from edurace.preferences import cutoff_risk_aversion, optimal_plateau, utility_ratio
from edurace.report import preset

e75, e24 = preset("paper-1975").economy, preset("paper-2024").economy

phi_star = cutoff_risk_aversion(e24, e75)
print(f"indifference at phi* = {phi_star:.4f}")
for phi in (0.5, 2.0, phi_star, 3.0, 5.0):
    ratio = utility_ratio(e24, e75, Preference(phi))
    # for phi > 1 utilities are negative, so a ratio above one means 2024 is worse
    if abs(ratio - 1) < 1e-9:
        verdict = "indifferent"
    else:
        verdict = "prefers " + ("2024" if (ratio > 1) == (phi < 1) else "1975")
    print(f"  phi={phi:6.3f}  E[U_2024]/E[U_1975]={ratio:10.4f}  {verdict}")

print("\ntechnology plateau for IQ-scale skills:")
for phi in (1.5, 2.5, 4.0):
    print(f"  phi={phi}: c* = {optimal_plateau(e24.skills, Preference(phi)):.4f}"
          f"  (2024 fit: c = {e24.tech.c_coef})")
