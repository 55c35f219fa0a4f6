"""
Photon-emission probabilities through the side-loss and cavity-output channels
"""

from .probabilities import (
    CHANNELS,
    EmissionCurve,
    EmissionProbabilities,
    emission_curve,
    emission_probabilities,
    quadrature_probabilities,
)
from .sweep import SWEEP_COLUMNS, EmissionSweep, SweepSummary, summarize_sweep, sweep_emission

__all__ = [
    "CHANNELS",
    "SWEEP_COLUMNS",
    "EmissionProbabilities",
    "EmissionCurve",
    "EmissionSweep",
    "SweepSummary",
    "emission_probabilities",
    "emission_curve",
    "quadrature_probabilities",
    "sweep_emission",
    "summarize_sweep",
]
