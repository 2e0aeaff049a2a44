"""Exception hierarchy shared by all model modules."""


class ModelDomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class InfeasibleCalibrationError(ModelDomainError):
    """Observed incomes admit no real technology coefficients (mean < median)."""


class DegenerateModelError(ModelDomainError):
    """The requested quantity does not exist for this (degenerate) economy."""


class UnboundedRegimeError(ModelDomainError):
    """Optimal investment diverges, so no finite interior quantity exists."""
