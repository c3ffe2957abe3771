"""
Error hierarchy shared by every module.
"""
from typing import Any, Dict, Optional


class TransformError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    @property
    def name(self) -> str:
        return type(self).__name__


class PoleError(TransformError):
    """A Gamma function is evaluated at a pole."""


class RangeError(TransformError):
    """An argument lies outside the validated range."""


class ParameterPole(TransformError):
    """The lower parameter of a 2F1 is a nonpositive integer."""


class LogarithmicCase(TransformError):
    """A connection formula degenerates into the logarithmic case."""


class DivergenceError(TransformError):
    """A series or integral has no pointwise value."""


class BranchError(TransformError):
    """A power function is requested on its branch cut."""


class DegenerateError(TransformError):
    """A formula has a vanishing denominator at the requested point."""


class StepFailure(TransformError):
    """The ODE integrator could not reach the requested tolerance."""


class QuadratureFailure(TransformError):
    """Adaptive quadrature exhausted its evaluation budget."""


class ResolutionError(TransformError):
    """A spectral grid does not resolve the integrand oscillation."""


class ConfigError(TransformError):
    """A run configuration is invalid."""
