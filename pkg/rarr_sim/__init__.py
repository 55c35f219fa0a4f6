"""
rarr-sim - Raman-assisted Rabi resonance of a vibronic emitter in a lossy two-mode cavity
"""

__version__ = "0.1.0"
__author__ = "rarr-sim developers"
__license__ = "Apache-2.0"

# Convenience imports
from .base import BaseTask, TaskOutput
from .dynamics import sample_trajectory, solve_single_mode, solve_two_mode
from .eigen import characteristic_cubic, solve_cubic, sweep_eigenvalues
from .emission import emission_probabilities, sweep_emission
from .errors import (
    ConfigError,
    NumericalError,
    ParameterError,
    RarrError,
)
from .models import SingleModeParams, SystemParams, ValidationReport, validate
from .spectrum import full_spectrum, mode_spectrum

__all__ = [
    "__version__",
    "BaseTask",
    "TaskOutput",
    "SystemParams",
    "SingleModeParams",
    "ValidationReport",
    "validate",
    "characteristic_cubic",
    "solve_cubic",
    "sweep_eigenvalues",
    "solve_two_mode",
    "solve_single_mode",
    "sample_trajectory",
    "emission_probabilities",
    "sweep_emission",
    "mode_spectrum",
    "full_spectrum",
    "RarrError",
    "ConfigError",
    "ParameterError",
    "NumericalError",
]
