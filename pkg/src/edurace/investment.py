"""Optimal educational investment.

Agents choose investment ``I`` to maximize expected earnings net of cost,

    A * exp(c * mu(I) + c**2 * sigma**2 / 2) - I,

where ``mu(I)`` is the mean skill bought with ``I``. For ``mu = ln I`` the
first-order condition ``A * exp(c**2 sigma**2 / 2) * c * I**(c - 1) = 1``
gives ``I = (A c exp(c**2 sigma**2 / 2)) ** (1 / (1 - c))`` whenever
``c < 1``; for ``c >= 1`` investment runs away.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import bisect, brentq

from .economy import Economy
from .errors import DegenerateModelError, ModelDomainError, UnboundedRegimeError

__all__ = [
    "Regime",
    "InvestmentSolution",
    "LogResponse",
    "TabulatedResponse",
    "objective",
    "marginal_net_return",
    "solve_log_form",
    "solve_general",
    "median_gap",
    "gap_ratio",
    "gap_sign_boundary",
    "DEFAULT_CEILING",
]

DEFAULT_CEILING = 1e12
_DEFAULT_FLOOR = 1e-12
_INTERIOR_FOC_TOL = 1e-8
_GAP_TOL = 1e-10


class Regime(str, enum.Enum):
    INTERIOR = "interior"
    UNBOUNDED = "unbounded"
    BOUNDARY_ZERO = "boundary-zero"


@dataclass(frozen=True)
class InvestmentSolution:
    investment: float
    regime: Regime
    foc_residual: float
    net_value: float


class LogResponse:
    """Mean skill ``mu(I) = ln I``, defined for ``I > 0``."""

    domain = (0.0, math.inf)

    def skill(self, i):
        return np.log(i)

    def derivative(self, i):
        return 1.0 / np.asarray(i, dtype=float)

    def contains(self, i):
        return i > 0

    def __repr__(self):
        return "LogResponse()"


class TabulatedResponse:
    """Mean skill interpolated through ``(investment, skill)`` knots.

    Interpolation is monotone piecewise-cubic (PCHIP), so the response is
    increasing and continuously differentiable between the first and last
    knot.
    """

    def __init__(self, knots):
        pts = np.asarray(knots, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise ModelDomainError("knots must be a sequence of at least two (I, mu) pairs")
        inv, mu = pts[:, 0], pts[:, 1]
        if not np.all(inv > 0):
            raise ModelDomainError("knot investments must be positive")
        if not (np.all(np.diff(inv) > 0) and np.all(np.diff(mu) > 0)):
            raise ModelDomainError("knots must be strictly increasing in both coordinates")
        self.knots = pts
        self._interp = PchipInterpolator(inv, mu, extrapolate=False)
        self._deriv = self._interp.derivative()
        self.domain = (float(inv[0]), float(inv[-1]))

    def skill(self, i):
        return self._interp(i)

    def derivative(self, i):
        return self._deriv(i)

    def contains(self, i):
        return self.domain[0] <= i <= self.domain[1]

    def __repr__(self):
        return f"TabulatedResponse({len(self.knots)} knots on [{self.domain[0]:g}, {self.domain[1]:g}])"


def _check_domain(resp, i):
    if not resp.contains(i):
        raise ModelDomainError(f"investment {i!r} outside the response domain {resp.domain}")


def _expected_earnings(econ, resp, i):
    c, sigma = econ.tech.c_coef, econ.skills.sigma
    expo = econ.tech.b_coef + c * float(resp.skill(i)) + 0.5 * c * c * sigma * sigma
    return math.exp(expo) if expo < 709.0 else math.inf


def objective(econ: Economy, resp, i: float) -> float:
    """Expected earnings net of investment at ``I = i``."""
    _check_domain(resp, i)
    return _expected_earnings(econ, resp, i) - i


def marginal_net_return(econ: Economy, resp, i: float) -> float:
    """Derivative of :func:`objective` in ``I``; zero at an interior optimum."""
    _check_domain(resp, i)
    return _expected_earnings(econ, resp, i) * econ.tech.c_coef * float(resp.derivative(i)) - 1.0


def solve_log_form(econ: Economy) -> InvestmentSolution:
    """Closed-form optimum for ``mu(I) = ln I``.

    The exponent is ``1 / (1 - c)``, the value that actually solves the
    first-order condition; ``c >= 1`` is reported as ``Regime.UNBOUNDED``
    and ``c = 0`` (no return to skill) as ``Regime.BOUNDARY_ZERO``.
    """
    a, c, sigma = econ.tech.a_coef, econ.tech.c_coef, econ.skills.sigma
    if c >= 1.0:
        return InvestmentSolution(math.inf, Regime.UNBOUNDED, math.nan, math.inf)
    if c == 0.0:
        return InvestmentSolution(0.0, Regime.BOUNDARY_ZERO, -1.0, a)
    half_var = 0.5 * c * c * sigma * sigma
    log_i = (econ.tech.b_coef + math.log(c) + half_var) / (1.0 - c)
    i = math.exp(log_i)
    residual = a * math.exp(half_var) * i ** (c - 1.0) * c - 1.0
    net = a * math.exp(half_var) * i**c - i
    return InvestmentSolution(i, Regime.INTERIOR, residual, net)


def _default_bounds(resp):
    lo, hi = resp.domain
    return max(lo, _DEFAULT_FLOOR), min(hi, DEFAULT_CEILING)


def solve_general(econ: Economy, resp, bounds=None, grid: int = 400) -> InvestmentSolution:
    """Maximize net expected earnings over ``[lo, hi]`` for any skill response.

    The marginal net return is scanned on a grid (geometric when ``lo > 0``);
    each + to - sign change is refined with Brent's method, and the best of
    those stationary points and the two endpoints wins. A maximum at ``hi``
    with the objective still rising is ``UNBOUNDED``; at ``lo`` with it
    falling, ``BOUNDARY_ZERO``.
    """
    lo, hi = _default_bounds(resp) if bounds is None else map(float, bounds)
    if not lo < hi:
        raise ModelDomainError(f"invalid bounds ({lo}, {hi})")
    _check_domain(resp, lo)
    _check_domain(resp, hi)

    xs = np.geomspace(lo, hi, grid) if lo > 0 else np.linspace(lo, hi, grid)
    xs[0], xs[-1] = lo, hi
    g = [marginal_net_return(econ, resp, float(x)) for x in xs]

    candidates = [lo, hi]
    for k in range(grid - 1):
        if g[k] > 0 and g[k + 1] <= 0:
            if g[k + 1] == 0:
                candidates.append(float(xs[k + 1]))
                continue
            root = brentq(lambda x: marginal_net_return(econ, resp, x),
                          float(xs[k]), float(xs[k + 1]), xtol=1e-300, rtol=4 * np.finfo(float).eps,
                          maxiter=500)
            candidates.append(root)

    values = [objective(econ, resp, x) for x in candidates]
    best = max(range(len(candidates)), key=values.__getitem__)
    x, value = candidates[best], values[best]
    residual = marginal_net_return(econ, resp, x)

    if x == hi and residual > 0:
        regime = Regime.UNBOUNDED
    elif x == lo and residual < 0:
        regime = Regime.BOUNDARY_ZERO
    else:
        regime = Regime.INTERIOR
        if abs(residual) > _INTERIOR_FOC_TOL:
            raise RuntimeError(f"interior optimum at {x!r} has FOC residual {residual!r}")
    return InvestmentSolution(x, regime, residual, value)


def gap_ratio(c: float, sigma: float) -> float:
    """``(M - I) / I = exp(-c**2 sigma**2 / 2) / c - 1`` at the log-form optimum."""
    return math.exp(-0.5 * c * c * sigma * sigma) / c - 1.0


def median_gap(econ: Economy) -> float:
    """Median income minus optimal investment for ``mu = ln I``.

    Evaluated directly (``A * I**c - I``) and through ``I * gap_ratio``; the
    two must agree to 1e-10 relative. A negative value means the median
    agent's wage does not cover the optimal outlay.
    """
    c, sigma = econ.tech.c_coef, econ.skills.sigma
    if c >= 1.0:
        raise UnboundedRegimeError(f"c={c!r} >= 1: optimal investment is unbounded")
    if c == 0.0:
        raise DegenerateModelError("c=0: optimal investment is zero and the gap identity is undefined")
    i = solve_log_form(econ).investment
    direct = econ.tech.a_coef * i**c - i
    via_identity = i * gap_ratio(c, sigma)
    scale = max(abs(direct), i)
    if abs(direct - via_identity) > _GAP_TOL * scale:
        raise RuntimeError(f"median gap identity violated: {direct!r} vs {via_identity!r}")
    return direct


def gap_sign_boundary(sigma: float, xtol: float = 1e-14) -> float:
    """Technology level ``c`` in (0, 1) where median income equals optimal investment."""
    if not sigma > 0:
        raise ModelDomainError(f"sigma must be positive, got {sigma!r}")
    # gap_ratio is +inf at 0+ and exp(-sigma^2/2) - 1 < 0 at 1
    return bisect(gap_ratio, 1e-12, 1.0, args=(sigma,), xtol=xtol, maxiter=200)
