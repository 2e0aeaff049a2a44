"""Closed-form wage and income machinery of the lognormal-wage economy.

Skill ``y`` is normal with mean ``mu`` and standard deviation ``sigma``;
technology maps skill into wages as ``A * exp(c * y)`` with ``A = exp(b)``.
All functions here are pure and accept numpy arrays wherever a skill or
IQ argument is taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ModelDomainError
from .normal import norm_ppf

__all__ = [
    "SkillDistribution",
    "Technology",
    "Economy",
    "IncomeMoments",
    "wage",
    "log_wage",
    "income_moments",
    "marginal_skill_value",
    "income_quantile",
]

_B_SYNC_TOL = 1e-9


@dataclass(frozen=True)
class SkillDistribution:
    """Normal law of skill (IQ points)."""

    mu: float = 100.0
    sigma: float = 15.0

    def __post_init__(self):
        if not math.isfinite(self.mu):
            raise ModelDomainError(f"mu must be finite, got {self.mu!r}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise ModelDomainError(f"sigma must be positive and finite, got {self.sigma!r}")


@dataclass(frozen=True)
class Technology:
    """Skill-augmenting technology ``(A, b, c)`` with ``b = ln A``.

    Build it with :meth:`from_level` or :meth:`from_log`; the direct
    constructor checks that ``a_coef`` and ``b_coef`` agree.
    """

    a_coef: float
    b_coef: float
    c_coef: float

    def __post_init__(self):
        if not (math.isfinite(self.a_coef) and self.a_coef > 0):
            raise ModelDomainError(f"A must be positive and finite, got {self.a_coef!r}")
        if abs(self.b_coef - math.log(self.a_coef)) > _B_SYNC_TOL:
            raise ModelDomainError(
                f"b={self.b_coef!r} is inconsistent with ln(A)={math.log(self.a_coef)!r}"
            )
        if not (math.isfinite(self.c_coef) and self.c_coef >= 0):
            raise ModelDomainError(f"c must be non-negative and finite, got {self.c_coef!r}")

    @classmethod
    def from_level(cls, a_coef: float, c_coef: float) -> "Technology":
        if not a_coef > 0:
            raise ModelDomainError(f"A must be positive, got {a_coef!r}")
        return cls(float(a_coef), math.log(a_coef), float(c_coef))

    @classmethod
    def from_log(cls, b_coef: float, c_coef: float) -> "Technology":
        return cls(math.exp(b_coef), float(b_coef), float(c_coef))


@dataclass(frozen=True)
class Economy:
    """A technology applied to a skill distribution; a mass one of agents."""

    tech: Technology
    skills: SkillDistribution = SkillDistribution()

    @classmethod
    def from_coefficients(cls, c: float, *, a: float | None = None, b: float | None = None,
                          mu: float = 100.0, sigma: float = 15.0) -> "Economy":
        """Shortcut taking exactly one of ``a`` (level) or ``b`` (log level)."""
        if (a is None) == (b is None):
            raise ModelDomainError("give exactly one of a or b")
        tech = Technology.from_level(a, c) if b is None else Technology.from_log(b, c)
        return cls(tech, SkillDistribution(mu, sigma))


@dataclass(frozen=True)
class IncomeMoments:
    mean: float
    median: float
    rho: float


def log_wage(econ: Economy, y):
    """``ln e(y) = b + c*y``."""
    return econ.tech.b_coef + econ.tech.c_coef * np.asarray(y, dtype=float)


def wage(econ: Economy, y):
    """Wage earnings ``A * exp(c*y)`` of an agent with skill ``y``."""
    return econ.tech.a_coef * np.exp(econ.tech.c_coef * np.asarray(y, dtype=float))


def income_moments(econ: Economy) -> IncomeMoments:
    """Mean, median and mean/median ratio of lognormal income."""
    a, c = econ.tech.a_coef, econ.tech.c_coef
    mu, sigma = econ.skills.mu, econ.skills.sigma
    half_var = 0.5 * c * c * sigma * sigma
    median = a * math.exp(c * mu)
    mean = a * math.exp(c * mu + half_var)
    return IncomeMoments(mean=mean, median=median, rho=math.exp(half_var))


def marginal_skill_value(econ: Economy, iq):
    """Expected annual earnings gain from raising mean skill from ``iq`` to ``iq + 1``.

    Evaluates ``A * exp(c*iq + c**2 * sigma**2 / 2) * (exp(c) - 1)`` with the
    population dispersion ``sigma`` kept and the individual's mean set to ``iq``.
    """
    a, c = econ.tech.a_coef, econ.tech.c_coef
    sigma = econ.skills.sigma
    iq = np.asarray(iq, dtype=float)
    return a * np.exp(c * iq + 0.5 * c * c * sigma * sigma) * math.expm1(c)


def income_quantile(econ: Economy, p: float) -> float:
    """Income at probability ``p``; ``p = 0.5`` gives the median exactly."""
    z = norm_ppf(p)
    a, c = econ.tech.a_coef, econ.tech.c_coef
    return a * math.exp(c * (econ.skills.mu + econ.skills.sigma * z))
