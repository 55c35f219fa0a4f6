"""
Exception hierarchy for rarr-sim
"""

from typing import Any, Optional


class RarrError(Exception):
    """Base class for every error raised by rarr-sim."""


class ConfigError(RarrError, ValueError):
    """A configuration document or command line could not be parsed."""


class ParameterError(RarrError, ValueError):
    """
    Physically invalid parameters or a violated precondition.

    Args:
        message: One-line diagnostic
        report: Optional validation report that produced the error
    """

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class NumericalError(RarrError, ArithmeticError):
    """Base class for numerical failures."""


class ConvergenceError(NumericalError):
    """Newton polishing did not reach the residual target."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class DegenerateSpectrumError(NumericalError):
    """Two eigenvalues coincide, so the residue form is singular."""


class AmbiguousBranchError(NumericalError):
    """Branch continuation cannot pair consecutive root sets uniquely."""

    def __init__(self, message: str, detuning: float):
        super().__init__(f"{message} at delta_omega={detuning!r}; refine the detuning grid")
        self.detuning = detuning


class StepSizeUnderflowError(NumericalError):
    """The adaptive integrator step collapsed below machine resolution."""

    def __init__(self, time: float):
        super().__init__(f"step size underflow at t={time!r}")
        self.time = time


class UndefinedTotalError(NumericalError):
    """Total emission probabilities requested for a system that never decays."""


class NonDecayingModeError(NumericalError):
    """A spectrum was requested for an amplitude with a non-decaying component."""
