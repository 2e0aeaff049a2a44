"""CRRA welfare of an economy's income distribution.

With ``U(C) = C**(1 - phi) / (1 - phi)`` and ``ln C = b + c*y`` normal,

    E[U] = exp((1 - phi)(c mu + b) + (1 - phi)**2 c**2 sigma**2 / 2) / (1 - phi).

For ``phi > 1`` utilities are negative and "better" means algebraically
larger; ratios of two negative utilities therefore read inverted (a ratio
above one means the numerator economy is worse).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .economy import Economy, SkillDistribution
from .errors import DegenerateModelError, ModelDomainError

__all__ = [
    "Preference",
    "expected_utility",
    "log_abs_expected_utility",
    "utility_gradient_c",
    "utility_curvature_c",
    "optimal_plateau",
    "utility_ratio",
    "log_utility_ratio",
    "cutoff_risk_aversion",
]


@dataclass(frozen=True)
class Preference:
    """Coefficient of relative risk aversion ``phi > 0``, ``phi != 1``."""

    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.phi) and self.phi > 0):
            raise ModelDomainError(f"phi must be positive and finite, got {self.phi!r}")
        if self.phi == 1.0:
            raise ModelDomainError("phi = 1 (log utility) is not supported; use 1 +/- 1e-6")

    @classmethod
    def _unchecked(cls, phi: float) -> "Preference":
        # test hook: admits phi = 0 (risk neutrality) and other edge values
        obj = object.__new__(cls)
        object.__setattr__(obj, "phi", float(phi))
        return obj


def _exponent(econ: Economy, phi: float) -> float:
    one = 1.0 - phi
    c, b = econ.tech.c_coef, econ.tech.b_coef
    mu, sigma = econ.skills.mu, econ.skills.sigma
    return one * (c * mu + b) + 0.5 * one * one * c * c * sigma * sigma


def _exp(x: float) -> float:
    return math.exp(x) if x < 709.78 else math.inf


def _check_phi(pref: Preference):
    if pref.phi == 1.0:
        raise ModelDomainError("expected utility formula undefined at phi = 1")


def log_abs_expected_utility(econ: Economy, pref: Preference) -> float:
    """``ln |E[U]|``; useful when ``E[U]`` itself under- or overflows."""
    _check_phi(pref)
    return _exponent(econ, pref.phi) - math.log(abs(1.0 - pref.phi))


def expected_utility(econ: Economy, pref: Preference) -> float:
    """Closed-form ex-ante expected CRRA utility; positive iff ``phi < 1``.

    Saturates to ``+-inf`` when the value exceeds the float range.
    """
    _check_phi(pref)
    one = 1.0 - pref.phi
    return _exp(_exponent(econ, pref.phi)) / one


def utility_gradient_c(econ: Economy, pref: Preference) -> float:
    """``dE[U]/dc = exp(...) * (mu + (1 - phi) c sigma**2)``."""
    _check_phi(pref)
    c, mu, sigma = econ.tech.c_coef, econ.skills.mu, econ.skills.sigma
    return _exp(_exponent(econ, pref.phi)) * (mu + (1.0 - pref.phi) * c * sigma * sigma)


def utility_curvature_c(econ: Economy, pref: Preference) -> float:
    """Second derivative of ``E[U]`` in ``c``, exact (not only at the plateau).

    At the plateau the first term vanishes and the sign is that of
    ``(1 - phi) sigma**2``.
    """
    _check_phi(pref)
    one = 1.0 - pref.phi
    c, mu, sigma = econ.tech.c_coef, econ.skills.mu, econ.skills.sigma
    slope = mu + one * c * sigma * sigma
    return _exp(_exponent(econ, pref.phi)) * (one * slope * slope + one * sigma * sigma)


def optimal_plateau(skills: SkillDistribution, pref: Preference) -> float:
    """Technology level ``c* = mu / ((phi - 1) sigma**2)`` maximizing expected utility.

    Returns ``math.inf`` for ``phi < 1``: more technology always raises
    expected utility, so there is no plateau.
    """
    if not skills.mu > 0:
        raise ModelDomainError(f"plateau requires mu > 0, got {skills.mu!r}")
    _check_phi(pref)
    if pref.phi < 1.0:
        return math.inf
    soc = (1.0 - pref.phi) * skills.sigma**2
    if not soc < 0:
        raise ArithmeticError("second-order condition fails at the plateau")
    return skills.mu / ((pref.phi - 1.0) * skills.sigma**2)


def _shared_skills(econ_a: Economy, econ_b: Economy) -> SkillDistribution:
    if econ_a.skills != econ_b.skills:
        raise ModelDomainError(
            f"economies must share a skill distribution, got {econ_a.skills} and {econ_b.skills}"
        )
    return econ_a.skills


def log_utility_ratio(econ_a: Economy, econ_b: Economy, pref: Preference) -> float:
    """``ln(E[U_a] / E[U_b])`` in closed form."""
    skills = _shared_skills(econ_a, econ_b)
    _check_phi(pref)
    one = 1.0 - pref.phi
    ta, tb = econ_a.tech, econ_b.tech
    inner = ((ta.c_coef - tb.c_coef) * skills.mu + ta.b_coef - tb.b_coef
             + 0.5 * one * (ta.c_coef**2 - tb.c_coef**2) * skills.sigma**2)
    return one * inner


def utility_ratio(econ_a: Economy, econ_b: Economy, pref: Preference) -> float:
    """``E[U_a] / E[U_b]`` for two economies with the same skills."""
    return math.exp(log_utility_ratio(econ_a, econ_b, pref))


def cutoff_risk_aversion(econ_a: Economy, econ_b: Economy) -> float:
    """Risk aversion at which agents are indifferent between two economies.

    ``econ_a`` is conventionally the later year. The result is symmetric in
    the two arguments.
    """
    skills = _shared_skills(econ_a, econ_b)
    ta, tb = econ_a.tech, econ_b.tech
    denom = 0.5 * (ta.c_coef**2 - tb.c_coef**2) * skills.sigma**2
    if denom == 0.0:
        raise DegenerateModelError("equal technology coefficients c: no finite cutoff risk aversion")
    numer = (ta.c_coef - tb.c_coef) * skills.mu + ta.b_coef - tb.b_coef + denom
    return numer / denom
