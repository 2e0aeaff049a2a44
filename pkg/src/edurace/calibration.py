"""Recover technology coefficients from mean and median income.

Given the mean/median ratio ``rho`` and the skill distribution,
``c = sqrt(ln(rho) / (sigma**2 / 2))`` and ``A = median * exp(-c * mu)``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from .economy import Economy, SkillDistribution, Technology, income_moments
from .errors import InfeasibleCalibrationError, ModelDomainError

__all__ = [
    "CalibrationInput",
    "CalibrationResult",
    "IncomeSeriesError",
    "calibrate",
    "growth_factors",
    "extrapolate",
    "apply_growth",
    "load_income_series",
    "PAPER_B_DECIMALS",
    "PAPER_C_DECIMALS",
]

# decimals of the published coefficient list
PAPER_B_DECIMALS = 1
PAPER_C_DECIMALS = 4


@dataclass(frozen=True)
class CalibrationInput:
    median_income: float
    mean_income: float
    skills: SkillDistribution = field(default_factory=SkillDistribution)
    label: str = ""

    def __post_init__(self):
        if not (self.median_income > 0 and self.mean_income > 0):
            raise ModelDomainError(
                f"incomes must be positive, got median={self.median_income!r}, "
                f"mean={self.mean_income!r}"
            )
        if self.mean_income < self.median_income:
            raise InfeasibleCalibrationError(
                f"mean income {self.mean_income!r} below median {self.median_income!r}: "
                "mean/median < 1 has no real technology coefficient"
            )


@dataclass(frozen=True)
class CalibrationResult:
    tech: Technology
    rho: float
    residuals: tuple[float, float]
    """Relative (mean, median) errors of the moments implied by ``tech``."""
    degenerate: bool = False
    """True when mean == median, i.e. ``c = 0``."""


def calibrate(data: CalibrationInput, paper_rounding: bool = False) -> CalibrationResult:
    """Solve the mean and median income equations for ``(A, c)``.

    With ``paper_rounding`` the log level ``b`` is rounded to one decimal and
    ``c`` to four before ``A = exp(b)`` is derived, reproducing the published
    coefficient list rather than the exact solution.
    """
    sigma = data.skills.sigma
    rho = data.mean_income / data.median_income
    c = math.sqrt(math.log(rho) / (0.5 * sigma * sigma))
    b = math.log(data.median_income) - c * data.skills.mu
    if paper_rounding:
        b = round(b, PAPER_B_DECIMALS)
        c = round(c, PAPER_C_DECIMALS)
    tech = Technology.from_log(b, c)

    moments = income_moments(Economy(tech, data.skills))
    residuals = (
        moments.mean / data.mean_income - 1.0,
        moments.median / data.median_income - 1.0,
    )
    return CalibrationResult(tech=tech, rho=rho, residuals=residuals, degenerate=(rho == 1.0))


def growth_factors(base: Technology, reference: Technology) -> tuple[float, float]:
    """Per-period gross growth factors ``(A_base/A_ref, c_base/c_ref)``."""
    for name, t in (("base", base), ("reference", reference)):
        if not (t.a_coef > 0 and t.c_coef > 0):
            raise ModelDomainError(f"{name} technology needs strictly positive A and c")
    return base.a_coef / reference.a_coef, base.c_coef / reference.c_coef


def extrapolate(base: Technology, reference: Technology, periods: float = 1.0) -> Technology:
    """Carry the reference-to-base percentage changes in ``A`` and ``c`` forward.

    ``periods`` counts spans of the same length as reference->base; one
    period applied to (2024, 1975) gives the 2073 coefficients.
    """
    return apply_growth(base, growth_factors(base, reference), periods)


def apply_growth(base: Technology, factors: tuple[float, float], periods: float) -> Technology:
    """Scale ``A`` and ``c`` by ``factors ** periods``."""
    if not (math.isfinite(periods) and periods >= 0):
        raise ModelDomainError(f"periods must be a finite non-negative number, got {periods!r}")
    ga, gc = factors
    if not (ga > 0 and gc > 0):
        raise ModelDomainError(f"growth factors must be positive, got {factors!r}")
    if periods == 0:
        return base
    return Technology.from_log(
        base.b_coef + periods * math.log(ga),
        base.c_coef * gc**periods,
    )


class IncomeSeriesError(ValueError):
    """A row of an income CSV could not be turned into a calibration input."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_REQUIRED = ("label", "median", "mean")
_OPTIONAL = ("mu", "sigma")


def _number(raw: str, row: int, column: str) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise IncomeSeriesError(f"not a number: {raw!r}", row, column) from None
    if not math.isfinite(value):
        raise IncomeSeriesError(f"not a finite number: {raw!r}", row, column)
    return value


def load_income_series(path) -> list[CalibrationInput]:
    """Read ``label,median,mean[,mu,sigma]`` rows from a UTF-8 CSV file.

    Rows are returned in file order and numbered from 1 (the first data
    row) in error messages. Skills default to N(100, 15).
    """
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        return []
    reader = csv.DictReader(text.splitlines())
    header = [h.strip() for h in (reader.fieldnames or [])]
    reader.fieldnames = header
    missing = [c for c in _REQUIRED if c not in header]
    if missing:
        raise IncomeSeriesError(f"missing required column(s): {', '.join(missing)}")
    unknown = [c for c in header if c not in _REQUIRED + _OPTIONAL]
    if unknown:
        raise IncomeSeriesError(f"unknown column(s): {', '.join(unknown)}")

    out = []
    for i, rec in enumerate(reader, start=1):
        if None in rec:
            raise IncomeSeriesError("too many fields", i)
        median = _number(rec["median"], i, "median")
        mean = _number(rec["mean"], i, "mean")
        mu = _number(rec["mu"], i, "mu") if rec.get("mu") not in (None, "") else 100.0
        sigma = _number(rec["sigma"], i, "sigma") if rec.get("sigma") not in (None, "") else 15.0
        try:
            out.append(CalibrationInput(median, mean, SkillDistribution(mu, sigma),
                                        (rec["label"] or "").strip()))
        except ModelDomainError as exc:
            raise IncomeSeriesError(str(exc), i) from exc
    return out
