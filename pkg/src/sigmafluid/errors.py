"""Exception types shared across the package."""


class SigmaFluidError(Exception):
    """Base class for all package errors."""


class DegenerateMetricError(SigmaFluidError):
    """Metric matrix is singular (or numerically indistinguishable from it)."""


class CausalDegeneracyError(SigmaFluidError):
    """A distribution or map kernel is lightlike/spacelike where a timelike
    direction is required."""


class RankDeficiencyError(SigmaFluidError):
    """Jacobian rank differs from the submersion requirement."""


class ChartBoundaryError(SigmaFluidError):
    """Point lies outside the chart, or too close to its validity boundary."""


class RegimeError(SigmaFluidError):
    """Input outside the regime where a formula is meaningful (e.g. negative
    sigma values fed to a fractional power)."""


class EosSingularityError(SigmaFluidError):
    """rho + p = 0: the fluid index is singular there."""


class IntegrationFailureError(SigmaFluidError):
    """ODE integration failed; carries the last accepted point."""

    def __init__(self, message, last_point=None):
        super().__init__(message)
        self.last_point = last_point


class UnknownCaseError(SigmaFluidError):
    """Requested catalog case is not registered."""


class ExpressionError(SigmaFluidError):
    """Expression string outside the supported grammar."""
