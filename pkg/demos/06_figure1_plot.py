"""Plot the value of one skill point against skill for 1975 and 2024.

Needs matplotlib (not a package dependency); without it the series is
printed instead. The curves cross near IQ 51: above it, the 2024 wage
curve rewards each extra point more.
"""

import math

from edurace.report import crossing_skill, preset, render_figure1

scenarios = [preset("paper-1975"), preset("paper-2024")]
fig = render_figure1(scenarios, (0, 170), 171)
cross = crossing_skill(scenarios[1].economy, scenarios[0].economy)
print(f"curves cross at IQ {cross:.2f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    for iq, v75 in fig.series("1975")[::17]:
        print(f"  iq={iq:5.0f}  ln value 1975={math.log(v75):7.3f}  2024={math.log(fig.cell(iq, '2024')):7.3f}")
else:
    ax = plt.figure(figsize=(6, 4)).gca()
    for label, color in (("1975", "tab:blue"), ("2024", "tab:red")):
        xs, ys = zip(*fig.series(label))
        ax.semilogy(xs, ys, color=color, label=label)
    ax.axvline(cross, color="grey", lw=0.8, ls=":")
    ax.set_xlabel("IQ / skill")
    ax.set_ylabel("USD per extra point per year")
    ax.legend()
    plt.tight_layout()
    plt.savefig("figure1.png", dpi=120)
    print("wrote figure1.png")
