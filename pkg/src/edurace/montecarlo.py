"""Monte Carlo oracle for the closed-form income and utility results.

Skills are drawn from a counter-based Philox stream: draw ``j`` always
lands in block ``j // BLOCK_SIZE``, and block ``k`` is generated by a
Philox instance keyed by the seed with counter word 1 set to ``k``. The
sample is therefore a pure function of ``(seed, n)`` no matter how many
worker threads fill the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .economy import Economy
from .errors import DegenerateModelError, ModelDomainError
from .normal import norm_cdf
from .preferences import Preference

__all__ = [
    "BLOCK_SIZE",
    "DEFAULT_PROBS",
    "SimulationConfig",
    "SimulationSummary",
    "LossFraction",
    "draw_skills",
    "simulate",
    "expost_loss_fraction",
]

BLOCK_SIZE = 1 << 16
DEFAULT_PROBS = (0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99)
_MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class SimulationConfig:
    n: int = 1_000_000
    seed: int = 0
    workers: int = 1
    """Threads used to fill the sample; never changes the result."""

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ModelDomainError(f"n must be a positive integer, got {self.n!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed <= _MAX_SEED:
            raise ModelDomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.workers < 1:
            raise ModelDomainError(f"workers must be >= 1, got {self.workers!r}")


@dataclass(frozen=True)
class SimulationSummary:
    n: int
    mean: float
    mean_std_error: float
    median: float
    median_std_error: float
    quantiles: dict = field(default_factory=dict)
    threshold: float | None = None
    frac_below: float | None = None
    frac_below_std_error: float | None = None
    phi: float | None = None
    utility_mean: float | None = None
    utility_std_error: float | None = None


@dataclass(frozen=True)
class LossFraction:
    analytic: float
    simulated: float
    std_error: float


def _fill_block(seed, k, out):
    gen = np.random.Generator(np.random.Philox(key=seed, counter=[0, k, 0, 0]))
    gen.standard_normal(len(out), out=out)


def draw_skills(mu: float, sigma: float, cfg: SimulationConfig) -> np.ndarray:
    """``cfg.n`` normal skill draws, identical for any ``cfg.workers``."""
    z = np.empty(cfg.n)
    blocks = [(k, z[start:start + BLOCK_SIZE])
              for k, start in enumerate(range(0, cfg.n, BLOCK_SIZE))]
    if cfg.workers == 1 or len(blocks) == 1:
        for k, out in blocks:
            _fill_block(cfg.seed, k, out)
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            list(pool.map(lambda kb: _fill_block(cfg.seed, kb[0], kb[1]), blocks))
    return mu + sigma * z


def _sample_se(x: np.ndarray) -> float:
    if len(x) < 2:
        return math.nan
    return float(np.std(x, ddof=1) / math.sqrt(len(x)))


def _median_se(sorted_w: np.ndarray) -> float:
    # distribution-free: half-width of the +-1 SE rank window around n/2
    n = len(sorted_w)
    if n < 4:
        return math.nan
    half = 0.5 * math.sqrt(n)
    lo = max(int(math.floor(n / 2 - half)), 0)
    hi = min(int(math.ceil(n / 2 + half)), n - 1)
    return float(sorted_w[hi] - sorted_w[lo]) / 2.0


def simulate(econ: Economy, cfg: SimulationConfig, threshold: float | None = None,
             pref: Preference | None = None, probs=DEFAULT_PROBS) -> SimulationSummary:
    """Draw ``cfg.n`` agents and summarize their wages.

    Wages are built in log space and exponentiated last. With a
    ``threshold`` the share of wages strictly below it is reported; with a
    ``pref`` the sample mean of CRRA utility.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        return _summarize(econ, cfg, threshold, pref, probs)


def _summarize(econ, cfg, threshold, pref, probs):
    y = draw_skills(econ.skills.mu, econ.skills.sigma, cfg)
    log_w = econ.tech.b_coef + econ.tech.c_coef * y
    # levels may overflow to inf; shares below a threshold are taken in logs
    w = np.exp(log_w)
    n = cfg.n

    probs = tuple(sorted(set(probs) | {0.5}))
    sorted_w = np.sort(w)
    qs = np.quantile(sorted_w, probs)
    quantiles = {p: float(q) for p, q in zip(probs, qs)}

    extra = {}
    if threshold is not None:
        if not threshold > 0:
            raise ModelDomainError(f"threshold must be positive, got {threshold!r}")
        frac = float(np.count_nonzero(log_w < math.log(threshold))) / n
        extra.update(threshold=float(threshold), frac_below=frac,
                     frac_below_std_error=math.sqrt(frac * (1.0 - frac) / n))
    if pref is not None:
        one = 1.0 - pref.phi
        if one == 0.0:
            raise ModelDomainError("phi = 1 is not supported")
        u = np.exp(one * log_w) / one
        extra.update(phi=pref.phi, utility_mean=float(np.mean(u)), utility_std_error=_sample_se(u))

    return SimulationSummary(
        n=n,
        mean=float(np.mean(w)),
        mean_std_error=_sample_se(w),
        median=quantiles[0.5],
        median_std_error=_median_se(sorted_w),
        quantiles=quantiles,
        **extra,
    )


def expost_loss_fraction(econ: Economy, investment: float, cfg: SimulationConfig) -> LossFraction:
    """Share of agents whose wage falls short of ``investment``.

    Analytic value ``Phi((ln(I/A)/c - mu)/sigma)`` alongside a simulated
    estimate and its binomial standard error.
    """
    if not investment > 0:
        raise ModelDomainError(f"investment must be positive, got {investment!r}")
    c = econ.tech.c_coef
    if c == 0.0:
        share = 1.0 if econ.tech.a_coef < investment else 0.0
        raise DegenerateModelError(f"c = 0: every wage equals A, loss fraction is trivially {share}")
    z = ((math.log(investment) - econ.tech.b_coef) / c - econ.skills.mu) / econ.skills.sigma
    summary = simulate(econ, cfg, threshold=investment, probs=(0.5,))
    return LossFraction(norm_cdf(z), summary.frac_below, summary.frac_below_std_error)
