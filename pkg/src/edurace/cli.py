"""Command-line front end.

    edurace <subcommand> [--scenario FILE] [--preset NAME] [--out FILE] [--seed N]
                         [--n N] [--phi X] [--alpha X] [--precision K] [--recalibrate]

Every printed number comes straight from a library call; the CLI only
selects inputs and formats output.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

from . import __version__
from .bellcurve import RentShare, mean_productivity, overinvestment_ratio, private_equilibrium, social_optimum
from .calibration import (
    CalibrationInput, IncomeSeriesError, calibrate, extrapolate, growth_factors, load_income_series,
)
from .economy import Economy, income_moments
from .errors import ModelDomainError
from .investment import Regime, median_gap, solve_log_form
from .montecarlo import SimulationConfig, expost_loss_fraction, simulate
from .preferences import Preference, cutoff_risk_aversion, expected_utility, optimal_plateau, utility_ratio
from .report import (
    DEFAULT_IQS, PAPER_INCOMES, Scenario, preset, render_figure1, render_table1, write_table_csv,
)
from .scenario import ScenarioError, load_scenario

__all__ = ["main", "run_command", "run_scenario_file", "COMMANDS"]

COMMANDS = ("calibrate", "moments", "invest", "utility", "plateau", "cutoff", "bellcurve",
            "simulate", "table1", "figure1", "extrapolate")

_DEFAULT_PRESETS = {
    "table1": ("paper-1975", "paper-2024", "paper-2073"),
    "figure1": ("paper-1975", "paper-2024"),
    "cutoff": ("paper-2024", "paper-1975"),
    "extrapolate": ("paper-2024", "paper-1975"),
}


class CommandError(Exception):
    """Bad command-line usage that argparse cannot catch on its own."""


def _g(x, precision):
    return f"{x:.{precision}g}"


def _csv(header, rows, precision):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_g(v, precision) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _scenarios(command, opts) -> list[Scenario]:
    scens = [load_scenario(p, opts.recalibrate) for p in opts.scenario or ()]
    scens += [preset(p, opts.recalibrate) for p in opts.preset or ()]
    if not scens:
        scens = [preset(p, opts.recalibrate) for p in _DEFAULT_PRESETS.get(command, ("paper-2024",))]
    out = []
    for s in scens:
        if opts.phi is not None:
            s = replace(s, preference=Preference(opts.phi))
        if opts.alpha is not None:
            s = replace(s, rent=RentShare(opts.alpha))
        if opts.n is not None or opts.seed is not None:
            base = s.simulation or SimulationConfig()
            s = replace(s, simulation=SimulationConfig(
                n=opts.n if opts.n is not None else base.n,
                seed=opts.seed if opts.seed is not None else base.seed,
                workers=opts.workers or base.workers))
        out.append(s)
    return out


def _need_pair(scens, command):
    if len(scens) != 2:
        raise CommandError(f"{command} needs exactly two scenarios (later first), got {len(scens)}")
    return scens


def _preference(s: Scenario) -> Preference:
    if s.preference is None:
        raise CommandError(f"scenario {s.label!r} has no preference; pass --phi")
    return s.preference


def _cmd_calibrate(scens, opts):
    if opts.data:
        inputs = load_income_series(opts.data)
    else:
        inputs = [CalibrationInput(m, e, label=y) for y, (m, e) in PAPER_INCOMES.items()]
    lines, rows = [], []
    for inp in inputs:
        exact = calibrate(inp)
        shown = calibrate(inp, paper_rounding=True) if opts.paper_rounding else exact
        t = shown.tech
        lines.append(
            f"{inp.label or '-'}: median={inp.median_income:g} mean={inp.mean_income:g} "
            f"rho={exact.rho:.6f} c={t.c_coef:.6g} b={t.b_coef:.6g} A={t.a_coef:.6g} "
            f"residuals(mean,median)=({shown.residuals[0]:.2e}, {shown.residuals[1]:.2e})"
            + (" [degenerate: c=0]" if exact.degenerate else "")
        )
        rows.append([inp.label, inp.median_income, inp.mean_income, exact.rho,
                     t.c_coef, t.b_coef, t.a_coef])
    return "\n".join(lines), _csv(["label", "median", "mean", "rho", "c", "b", "A"], rows, opts.precision)


def _cmd_moments(scens, opts):
    lines, rows = [], []
    for s in scens:
        m = income_moments(s.economy)
        lines.append(f"{s.label}: mean={m.mean:.{opts.precision}g} median={m.median:.{opts.precision}g} "
                     f"rho={m.rho:.{opts.precision}g}")
        year = s.preset.removeprefix("paper-")
        if year in PAPER_INCOMES and not opts.recalibrate:
            med, mean = PAPER_INCOMES[year]
            lines.append(f"  note: paper-rounded coefficients; the calibration inputs were "
                         f"median={med:g}, mean={mean:g} (use --recalibrate for an exact fit)")
        rows.append([s.label, m.mean, m.median, m.rho])
    return "\n".join(lines), _csv(["label", "mean", "median", "rho"], rows, opts.precision)


def _cmd_invest(scens, opts):
    lines, rows = [], []
    for s in scens:
        sol = solve_log_form(s.economy)
        line = f"{s.label}: regime={sol.regime.value} investment={sol.investment:.{opts.precision}g}"
        gap, loss = float("nan"), float("nan")
        if sol.regime is Regime.INTERIOR:
            gap = median_gap(s.economy)
            line += (f" foc_residual={sol.foc_residual:.2e} net_value={sol.net_value:.{opts.precision}g}"
                     f" median_minus_investment={gap:.{opts.precision}g}")
            if s.simulation is not None:
                lf = expost_loss_fraction(s.economy, sol.investment, s.simulation)
                loss = lf.analytic
                line += f" loss_fraction={lf.analytic:.6f} (simulated {lf.simulated:.6f} +- {lf.std_error:.1e})"
        lines.append(line)
        rows.append([s.label, sol.regime.value, sol.investment, sol.foc_residual, gap, loss])
    header = ["label", "regime", "investment", "foc_residual", "median_minus_investment", "loss_fraction"]
    return "\n".join(lines), _csv(header, rows, opts.precision)


def _cmd_utility(scens, opts):
    lines, rows = [], []
    for s in scens:
        pref = _preference(s)
        eu = expected_utility(s.economy, pref)
        lines.append(f"{s.label}: phi={pref.phi:g} expected_utility={eu:.{opts.precision}g}")
        rows.append([s.label, pref.phi, eu])
    return "\n".join(lines), _csv(["label", "phi", "expected_utility"], rows, opts.precision)


def _cmd_plateau(scens, opts):
    lines, rows = [], []
    for s in scens:
        pref = _preference(s)
        c_star = optimal_plateau(s.economy.skills, pref)
        where = "unbounded (phi < 1)" if c_star == float("inf") else f"{c_star:.{opts.precision}g}"
        lines.append(f"{s.label}: phi={pref.phi:g} optimal c*={where} current c={s.economy.tech.c_coef:g}")
        rows.append([s.label, pref.phi, c_star, s.economy.tech.c_coef])
    return "\n".join(lines), _csv(["label", "phi", "c_star", "c"], rows, opts.precision)


def _cmd_cutoff(scens, opts):
    a, b = _need_pair(scens, "cutoff")
    phi = cutoff_risk_aversion(a.economy, b.economy)
    pref = Preference(phi)
    ratio = utility_ratio(a.economy, b.economy, pref)
    eu_a, eu_b = expected_utility(a.economy, pref), expected_utility(b.economy, pref)
    text = (f"cutoff risk aversion phi* ({a.label} vs {b.label}) = {phi:.6g}\n"
            f"  check at phi*: E[U_{a.label}]/E[U_{b.label}] = {ratio:.12g}\n"
            f"  E[U_{a.label}] = {eu_a:.{opts.precision}g}, E[U_{b.label}] = {eu_b:.{opts.precision}g}\n"
            f"  agents with phi above phi* prefer the distribution with the lower c")
    return text, _csv(["later", "earlier", "phi_star", "utility_ratio"], [[a.label, b.label, phi, ratio]],
                      opts.precision)


def _cmd_bellcurve(scens, opts):
    lines, rows = [], []
    for s in scens:
        rent = s.rent or RentShare(0.5)
        priv, soc = private_equilibrium(s.economy, rent), social_optimum(s.economy, rent)
        ratio = overinvestment_ratio(s.economy, rent) if 0 < rent.alpha and priv.regime is Regime.INTERIOR \
            and soc.regime is Regime.INTERIOR else float("nan")
        prod = mean_productivity(s.economy, rent)
        who = "firms (AI training)" if s.preset == "chatbot" else "agents"
        lines.append(f"{s.label} [{who}]: alpha={rent.alpha:g} private={priv.investment:.{opts.precision}g} "
                     f"({priv.regime.value}) social={soc.investment:.{opts.precision}g} ({soc.regime.value}) "
                     f"overinvestment_ratio={ratio:.{opts.precision}g} mean_productivity={prod:.{opts.precision}g}")
        rows.append([s.label, rent.alpha, priv.investment, soc.investment, ratio, prod])
    header = ["label", "alpha", "private", "social", "ratio", "mean_productivity"]
    return "\n".join(lines), _csv(header, rows, opts.precision)


def _cmd_simulate(scens, opts):
    lines, rows = [], []
    for s in scens:
        cfg = s.simulation or SimulationConfig(workers=opts.workers or 1)
        summ = simulate(s.economy, cfg, threshold=opts.threshold, pref=s.preference)
        m = income_moments(s.economy)
        p = opts.precision
        lines.append(f"{s.label}: n={summ.n} seed={cfg.seed}")
        lines.append(f"  mean   simulated={summ.mean:.{p}g} +- {summ.mean_std_error:.2g}  closed form={m.mean:.{p}g}")
        lines.append(f"  median simulated={summ.median:.{p}g} +- {summ.median_std_error:.2g}  closed form={m.median:.{p}g}")
        if summ.frac_below is not None:
            lines.append(f"  share below {summ.threshold:g}: {summ.frac_below:.6f} +- {summ.frac_below_std_error:.1e}")
        if summ.utility_mean is not None:
            lines.append(f"  utility (phi={summ.phi:g}) simulated={summ.utility_mean:.{p}g} +- "
                         f"{summ.utility_std_error:.2g}  closed form={expected_utility(s.economy, s.preference):.{p}g}")
        rows += [[s.label, f"q{q:g}", v] for q, v in summ.quantiles.items()]
        rows += [[s.label, "mean", summ.mean], [s.label, "mean_std_error", summ.mean_std_error]]
    return "\n".join(lines), _csv(["label", "statistic", "value"], rows, opts.precision)


def _cmd_table1(scens, opts):
    table = render_table1(scens, opts.iq or DEFAULT_IQS)
    text = write_table_csv(table, precision=opts.precision)
    return "value of one extra skill point (annual, wage units)\n" + text.rstrip(), text


def _cmd_figure1(scens, opts):
    table = render_figure1(scens, (opts.iq_min, opts.iq_max), opts.samples)
    text = write_table_csv(table, precision=opts.precision)
    return f"figure series: {len(table.rows)} points per scenario on [{opts.iq_min:g}, {opts.iq_max:g}]" \
           f" (plot on a log axis)", text


def _cmd_extrapolate(scens, opts):
    base, ref = _need_pair(scens, "extrapolate")
    t = extrapolate(base.economy.tech, ref.economy.tech, opts.periods)
    ga, gc = growth_factors(base.economy.tech, ref.economy.tech)
    text = (f"growth per period ({ref.label} -> {base.label}): A x{ga:.6g}, c x{gc:.6g}\n"
            f"after {opts.periods:g} period(s): A={t.a_coef:.6g} b={t.b_coef:.6g} c={t.c_coef:.6g}")
    return text, _csv(["periods", "A", "b", "c"], [[float(opts.periods), t.a_coef, t.b_coef, t.c_coef]],
                      opts.precision)


_HANDLERS = {
    "calibrate": _cmd_calibrate, "moments": _cmd_moments, "invest": _cmd_invest,
    "utility": _cmd_utility, "plateau": _cmd_plateau, "cutoff": _cmd_cutoff,
    "bellcurve": _cmd_bellcurve, "simulate": _cmd_simulate, "table1": _cmd_table1,
    "figure1": _cmd_figure1, "extrapolate": _cmd_extrapolate,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edurace", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS, metavar="subcommand",
                   help="one of: " + ", ".join(COMMANDS))
    p.add_argument("--scenario", action="append", metavar="FILE", help="TOML scenario file (repeatable)")
    p.add_argument("--preset", action="append", metavar="NAME",
                   help="paper-1975, paper-2024, paper-2073 or chatbot (repeatable)")
    p.add_argument("--out", metavar="FILE", help="also write a CSV artifact here")
    p.add_argument("--seed", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--workers", type=int, help="simulation threads (results do not depend on it)")
    p.add_argument("--phi", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--precision", type=int, default=6, metavar="K", help="significant digits (default 6)")
    p.add_argument("--recalibrate", action="store_true",
                   help="use unrounded calibration instead of the published coefficients")
    p.add_argument("--data", metavar="CSV", help="calibrate: income CSV with label,median,mean[,mu,sigma]")
    p.add_argument("--paper-rounding", action="store_true",
                   help="calibrate: round b to 1 and c to 4 decimals as published")
    p.add_argument("--periods", type=float, default=1.0, help="extrapolate: number of periods")
    p.add_argument("--iq", type=float, action="append", help="table1: IQ row (repeatable)")
    p.add_argument("--iq-min", type=float, default=0.0)
    p.add_argument("--iq-max", type=float, default=170.0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--threshold", type=float, help="simulate: report the share of wages below this")
    return p


def run_command(command: str, opts: argparse.Namespace) -> tuple[str, str | None]:
    """Dispatch ``command``; returns (report text, CSV text)."""
    if command not in _HANDLERS:
        raise CommandError(f"unknown subcommand {command!r}")
    scens = [] if command == "calibrate" else _scenarios(command, opts)
    return _HANDLERS[command](scens, opts)


def run_scenario_file(path, command: str, *args: str) -> tuple[str, str | None]:
    """Run ``command`` on one scenario file, with extra CLI-style ``args``."""
    opts = build_parser().parse_args([command, "--scenario", str(path), *args])
    return run_command(command, opts)


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        text, artifact = run_command(opts.command, opts)
    except (CommandError, ScenarioError, IncomeSeriesError, ModelDomainError) as exc:
        print(f"edurace: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(text)
    if opts.out and artifact is not None:
        with open(opts.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(artifact)
    return 0


if __name__ == "__main__":
    sys.exit(main())
