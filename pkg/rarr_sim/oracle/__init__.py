"""
Independent numerical integration of the amplitude equations
"""

from .integrator import MAX_TOLERANCE, MIN_TOLERANCE, DenseTrajectory, integrate
from .system import OdeSystem

__all__ = [
    "OdeSystem",
    "DenseTrajectory",
    "integrate",
    "MIN_TOLERANCE",
    "MAX_TOLERANCE",
]
