"""Lognormal-wage economy: calibration, educational investment, CRRA welfare,
rent competition, and a Monte Carlo oracle for all of the closed forms."""

__version__ = "0.1.0"

from .errors import (
    DegenerateModelError,
    InfeasibleCalibrationError,
    ModelDomainError,
    UnboundedRegimeError,
)
from .economy import (
    Economy,
    IncomeMoments,
    SkillDistribution,
    Technology,
    income_moments,
    income_quantile,
    marginal_skill_value,
    wage,
)
from .calibration import CalibrationInput, CalibrationResult, calibrate, extrapolate, load_income_series
from .investment import (
    InvestmentSolution,
    LogResponse,
    Regime,
    TabulatedResponse,
    median_gap,
    objective,
    solve_general,
    solve_log_form,
)
from .preferences import (
    Preference,
    cutoff_risk_aversion,
    expected_utility,
    optimal_plateau,
    utility_ratio,
)
from .bellcurve import (
    RentShare,
    mean_productivity,
    overinvestment_ratio,
    private_equilibrium,
    social_optimum,
)
from .montecarlo import SimulationConfig, SimulationSummary, expost_loss_fraction, simulate
from .report import Scenario, TableArtifact, preset, render_figure1, render_table1
