"""Competition for monopoly rents and overinvestment in education.

A share ``alpha`` of earnings reflects own productivity and ``1 - alpha``
reflects beating the population mean skill, so agent ``i`` expects

    A * exp(c mu_i - (1 - alpha) c mu + c**2 sigma**2 / 2) - I_i.

Agents take ``mu`` as given; a planner internalizes ``mu_i = mu``. With
``mu_i = ln I_i`` the symmetric outcomes are

    I_priv = (A c exp(c**2 sigma**2 / 2)) ** (1 / (1 - alpha c))
    I_soc  = (A alpha c exp(c**2 sigma**2 / 2)) ** (1 / (1 - alpha c))

and ``I_priv / I_soc = alpha ** (-1 / (1 - alpha c))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .economy import Economy, income_moments
from .errors import DegenerateModelError, ModelDomainError, UnboundedRegimeError
from .investment import InvestmentSolution, Regime

__all__ = [
    "RentShare",
    "private_equilibrium",
    "social_optimum",
    "overinvestment_ratio",
    "mean_productivity",
    "private_foc_residual",
    "social_foc_residual",
    "best_response",
    "iterate_best_response",
]

_RATIO_TOL = 1e-10


@dataclass(frozen=True)
class RentShare:
    """Share ``alpha`` of income earned by productivity rather than rent capture."""

    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ModelDomainError(f"alpha must lie in [0, 1], got {self.alpha!r}")


def _log_level(econ: Economy) -> float:
    c, sigma = econ.tech.c_coef, econ.skills.sigma
    return econ.tech.b_coef + 0.5 * c * c * sigma * sigma


def private_foc_residual(econ: Economy, rent: RentShare, own: float, population: float) -> float:
    """Private marginal net return at own investment ``own`` when everyone else invests ``population``."""
    c = econ.tech.c_coef
    mu_i, mu = math.log(own), math.log(population)
    return math.exp(_log_level(econ) + c * mu_i - (1.0 - rent.alpha) * c * mu) * c / own - 1.0


def social_foc_residual(econ: Economy, rent: RentShare, investment: float) -> float:
    """Planner's marginal net return at the common investment level."""
    c, alpha = econ.tech.c_coef, rent.alpha
    mu = math.log(investment)
    return math.exp(_log_level(econ) + alpha * c * mu) * alpha * c / investment - 1.0


def private_equilibrium(econ: Economy, rent: RentShare) -> InvestmentSolution:
    """Symmetric equilibrium of privately chosen investment.

    Unbounded when ``alpha c >= 1`` (no fixed point) or ``c >= 1`` (each
    agent's own problem is convex, so best responses run away).
    """
    c, alpha = econ.tech.c_coef, rent.alpha
    if alpha * c >= 1.0 or c >= 1.0:
        return InvestmentSolution(math.inf, Regime.UNBOUNDED, math.nan, math.inf)
    if c == 0.0:
        return InvestmentSolution(0.0, Regime.BOUNDARY_ZERO, -1.0, econ.tech.a_coef)
    i = math.exp((_log_level(econ) + math.log(c)) / (1.0 - alpha * c))
    net = math.exp(_log_level(econ) + alpha * c * math.log(i)) - i
    return InvestmentSolution(i, Regime.INTERIOR, private_foc_residual(econ, rent, i, i), net)


def social_optimum(econ: Economy, rent: RentShare) -> InvestmentSolution:
    """Investment maximizing ``A exp(alpha c ln I + c**2 sigma**2 / 2) - I``."""
    c, alpha = econ.tech.c_coef, rent.alpha
    if alpha * c >= 1.0:
        return InvestmentSolution(math.inf, Regime.UNBOUNDED, math.nan, math.inf)
    if alpha == 0.0 or c == 0.0:
        return InvestmentSolution(0.0, Regime.BOUNDARY_ZERO, -1.0, math.exp(_log_level(econ)))
    i = math.exp((_log_level(econ) + math.log(alpha * c)) / (1.0 - alpha * c))
    net = math.exp(_log_level(econ) + alpha * c * math.log(i)) - i
    return InvestmentSolution(i, Regime.INTERIOR, social_foc_residual(econ, rent, i), net)


def overinvestment_ratio(econ: Economy, rent: RentShare) -> float:
    """``I_priv / I_soc``, checked against ``alpha ** (-1 / (1 - alpha c))``."""
    c, alpha = econ.tech.c_coef, rent.alpha
    if alpha == 0.0:
        raise DegenerateModelError("alpha = 0: the planner invests nothing, ratio undefined")
    priv, soc = private_equilibrium(econ, rent), social_optimum(econ, rent)
    if priv.regime is Regime.UNBOUNDED or soc.regime is Regime.UNBOUNDED:
        raise UnboundedRegimeError(f"alpha*c={alpha * c!r}, c={c!r}: investment is unbounded")
    if soc.regime is Regime.BOUNDARY_ZERO:
        raise DegenerateModelError("c = 0: no investment on either side, ratio undefined")
    closed = alpha ** (-1.0 / (1.0 - alpha * c))
    quotient = priv.investment / soc.investment
    if abs(quotient - closed) > _RATIO_TOL * closed:
        raise RuntimeError(f"overinvestment ratio mismatch: {quotient!r} vs {closed!r}")
    return closed


def mean_productivity(econ: Economy, rent: RentShare) -> float:
    """Mean labor productivity ``A exp(alpha c mu + c**2 sigma**2 / 2)``.

    Equals mean income at ``alpha = 1``; falls as the rent share grows.
    """
    if rent.alpha == 1.0:
        return income_moments(econ).mean
    return math.exp(_log_level(econ) + rent.alpha * econ.tech.c_coef * econ.skills.mu)


def best_response(econ: Economy, rent: RentShare, population: float) -> float:
    """Agent's optimal investment when every other agent invests ``population``."""
    c = econ.tech.c_coef
    if c >= 1.0:
        raise UnboundedRegimeError(f"c={c!r} >= 1: best response is unbounded")
    if c == 0.0:
        return 0.0
    mu = math.log(population)
    return math.exp((_log_level(econ) + math.log(c) - (1.0 - rent.alpha) * c * mu) / (1.0 - c))


def iterate_best_response(econ: Economy, rent: RentShare, start: float, respond=None,
                          tol: float = 1e-12, max_iter: int = 10_000) -> float:
    """Iterate ``I <- respond(I)`` to the symmetric fixed point.

    ``respond`` defaults to the closed-form :func:`best_response`; pass a
    numeric maximizer to obtain an independent check. Converges when
    ``(1 - alpha) c < 1 - c``.
    """
    if respond is None:
        def respond(i):
            return best_response(econ, rent, i)
    i = float(start)
    for _ in range(max_iter):
        nxt = respond(i)
        if abs(nxt - i) <= tol * max(abs(nxt), 1e-300):
            return nxt
        i = nxt
    raise RuntimeError(f"best-response iteration did not converge in {max_iter} steps")
