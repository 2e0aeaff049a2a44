"""Scenario presets and reproduction tables.

Presets carry the published (rounded) coefficients: ``b = 7.2, c = 0.0376``
for 1975 and ``b = 5.5, c = 0.0579`` for 2024, with 2073 extrapolated from
them. ``recalibrate=True`` swaps in the unrounded fit of the underlying
income figures instead.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .bellcurve import RentShare
from .calibration import CalibrationInput, calibrate, extrapolate
from .economy import Economy, SkillDistribution, Technology, marginal_skill_value
from .errors import ModelDomainError
from .montecarlo import SimulationConfig
from .preferences import Preference

__all__ = [
    "PAPER_INCOMES",
    "PRESET_NAMES",
    "DEFAULT_IQS",
    "Scenario",
    "preset",
    "TableArtifact",
    "render_table1",
    "render_figure1",
    "write_table_csv",
    "read_table_csv",
    "crossing_skill",
]

# (median, mean) household income used for calibration
PAPER_INCOMES = {"1975": (58000.0, 68000.0), "2024": (83000.0, 121000.0)}
_PAPER_COEFFS = {"1975": (7.2, 0.0376), "2024": (5.5, 0.0579)}

PRESET_NAMES = ("paper-1975", "paper-2024", "paper-2073", "chatbot")
DEFAULT_IQS = (70, 85, 100, 115, 130, 145, 160, 175)


@dataclass(frozen=True)
class Scenario:
    label: str
    economy: Economy
    preference: Preference | None = None
    rent: RentShare | None = None
    simulation: SimulationConfig | None = None
    preset: str = "none"


def _year_tech(year: str, recalibrate: bool) -> Technology:
    if recalibrate:
        median, mean = PAPER_INCOMES[year]
        return calibrate(CalibrationInput(median, mean, SkillDistribution(), year)).tech
    b, c = _PAPER_COEFFS[year]
    return Technology.from_log(b, c)


def preset(name: str, recalibrate: bool = False) -> Scenario:
    """Scenario for one of :data:`PRESET_NAMES`, skills N(100, 15)."""
    skills = SkillDistribution(100.0, 15.0)
    if name == "paper-1975":
        tech, label = _year_tech("1975", recalibrate), "1975"
    elif name == "paper-2024":
        tech, label = _year_tech("2024", recalibrate), "2024"
    elif name == "paper-2073":
        tech = extrapolate(_year_tech("2024", recalibrate), _year_tech("1975", recalibrate), 1.0)
        label = "2073"
    elif name == "chatbot":
        # firms training AI models instead of agents investing in schooling
        tech, label = _year_tech("2024", recalibrate), "chatbot"
    else:
        raise ModelDomainError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")
    return Scenario(label=label, economy=Economy(tech, skills), preset=name)


@dataclass(frozen=True)
class TableArtifact:
    """Rows of ``(iq, values...)``, one value column per scenario label."""

    labels: tuple[str, ...]
    rows: tuple[tuple[float, tuple[float, ...]], ...]
    key: str = "iq"

    def __post_init__(self):
        iqs = [r[0] for r in self.rows]
        if iqs != sorted(iqs):
            raise ModelDomainError("table rows must be sorted by iq")
        for _, values in self.rows:
            if len(values) != len(self.labels) or not all(math.isfinite(v) for v in values):
                raise ModelDomainError("every row needs one finite value per label")

    def column(self, label: str) -> list[float]:
        j = self.labels.index(label)
        return [values[j] for _, values in self.rows]

    def series(self, label: str) -> list[tuple[float, float]]:
        j = self.labels.index(label)
        return [(iq, values[j]) for iq, values in self.rows]

    def cell(self, iq: float, label: str) -> float:
        j = self.labels.index(label)
        for x, values in self.rows:
            if x == iq:
                return values[j]
        raise KeyError(iq)

    def rounded(self, precision: int) -> "TableArtifact":
        """Copy with every number passed through ``precision`` significant digits."""
        def r(x):
            return float(f"{x:.{precision}g}")
        rows = tuple((r(iq), tuple(r(v) for v in values)) for iq, values in self.rows)
        return replace(self, rows=rows)


def _table(scenarios, iqs) -> TableArtifact:
    scenarios = list(scenarios)
    if not scenarios:
        raise ModelDomainError("at least one scenario is required")
    iqs = sorted(float(x) for x in iqs)
    if not iqs:
        raise ModelDomainError("at least one iq value is required")
    cols = [marginal_skill_value(s.economy, np.asarray(iqs)) for s in scenarios]
    rows = tuple((iq, tuple(float(col[k]) for col in cols)) for k, iq in enumerate(iqs))
    return TableArtifact(labels=tuple(s.label for s in scenarios), rows=rows)


def render_table1(scenarios, iq_list=DEFAULT_IQS) -> TableArtifact:
    """Value of one extra skill point at each IQ, one column per scenario."""
    return _table(scenarios, iq_list)


def render_figure1(scenarios, iq_range=(0.0, 170.0), samples: int = 100) -> TableArtifact:
    """Marginal skill value sampled uniformly over ``iq_range`` (plot on a log axis)."""
    lo, hi = iq_range
    if not lo < hi:
        raise ModelDomainError(f"invalid iq range ({lo}, {hi})")
    if samples < 2:
        raise ModelDomainError(f"need at least 2 samples, got {samples}")
    return _table(scenarios, np.linspace(lo, hi, samples))


def crossing_skill(econ_late: Economy, econ_early: Economy) -> float:
    """IQ above which the later economy pays more for an extra skill point."""
    ta, tb = econ_late.tech, econ_early.tech
    if ta.c_coef == tb.c_coef:
        raise ModelDomainError("equal c: the two curves are parallel on a log scale")
    # both skill dispersions enter through c**2 sigma**2 / 2
    offset = (tb.b_coef - ta.b_coef
              + 0.5 * (tb.c_coef**2 * econ_early.skills.sigma**2 - ta.c_coef**2 * econ_late.skills.sigma**2)
              + math.log(math.expm1(tb.c_coef) / math.expm1(ta.c_coef)))
    return offset / (ta.c_coef - tb.c_coef)


def _fmt(x: float, precision: int | None) -> str:
    return repr(float(x)) if precision is None else f"{x:.{precision}g}"


def write_table_csv(table: TableArtifact, dest=None, precision: int | None = 6) -> str:
    """Serialize to CSV text (and to ``dest`` when given).

    ``precision=None`` writes shortest round-trip floats, so reading the
    file back reproduces ``table`` exactly; otherwise it reproduces
    ``table.rounded(precision)``.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([table.key, *table.labels])
    for iq, values in table.rows:
        w.writerow([_fmt(iq, precision), *(_fmt(v, precision) for v in values)])
    text = buf.getvalue()
    if dest is not None:
        Path(dest).write_text(text, encoding="utf-8")
    return text


def read_table_csv(source) -> TableArtifact:
    """Parse a table written by :func:`write_table_csv` (path or CSV text)."""
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        source = Path(source).read_text(encoding="utf-8")
    rows = list(csv.reader(io.StringIO(source)))
    if not rows:
        raise ModelDomainError("empty table")
    key, *labels = rows[0]
    body = tuple((float(r[0]), tuple(float(v) for v in r[1:])) for r in rows[1:] if r)
    return TableArtifact(labels=tuple(labels), rows=body, key=key)
