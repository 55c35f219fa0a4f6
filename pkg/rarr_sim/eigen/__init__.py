"""
Eigenfrequencies of the two-mode amplitude system
"""

from .cubic import (
    BRANCH_LABELS,
    CubicCoefficients,
    EigenTriple,
    characteristic_cubic,
    solve_cubic,
)
from .tracking import CrossingGap, avoided_crossing, beat_frequency, sweep_eigenvalues

__all__ = [
    "BRANCH_LABELS",
    "CubicCoefficients",
    "EigenTriple",
    "CrossingGap",
    "characteristic_cubic",
    "solve_cubic",
    "sweep_eigenvalues",
    "avoided_crossing",
    "beat_frequency",
]
