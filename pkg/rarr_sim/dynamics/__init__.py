"""
Closed-form probability amplitudes of the one- and two-mode systems
"""

from .single_mode import SingleModeSolution, solve_single_mode
from .trajectory import TRAJECTORY_COLUMNS, AmplitudeSource, Trajectory, TrajectorySample, sample_trajectory
from .two_mode import ResidueSolution, raman_resonance_amplitudes, solve_two_mode

__all__ = [
    "AmplitudeSource",
    "ResidueSolution",
    "SingleModeSolution",
    "Trajectory",
    "TrajectorySample",
    "TRAJECTORY_COLUMNS",
    "solve_two_mode",
    "solve_single_mode",
    "raman_resonance_amplitudes",
    "sample_trajectory",
]
