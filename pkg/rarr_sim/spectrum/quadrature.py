"""
Numerical cross-checks of the residue spectra.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from ..dynamics import ResidueSolution
from ..errors import NonDecayingModeError
from ..models import SystemParams
from .analytic import mode_residues, mode_spectrum

logger = logging.getLogger(__name__)

PARSEVAL_WINDOW = 50.0
HORIZON_DECAYS = 50.0
QUADRATURE_STEP = 0.01


def parseval_weight(
    solution: ResidueSolution, params: SystemParams, which: str, window: Optional[float] = None
) -> float:
    """
    kappa/(2 pi) times the integral of a mode spectrum over +-window.

    Equals the total emission probability of that mode when the window
    captures the spectrum. The default window is 50 g_a.
    """
    half = PARSEVAL_WINDOW * params.g_a if window is None else window
    centres = -solution.lambdas.imag
    points = np.unique(centres[np.abs(centres) < half])

    def density(detuning: float) -> float:
        return float(mode_spectrum(solution, which, [detuning])[0])

    area, _ = integrate.quad(density, -half, half, points=points, limit=500, epsabs=1e-12, epsrel=1e-9)
    return params.kappa / (2 * np.pi) * area


def truncated_double_quadrature(
    solution: ResidueSolution,
    which: str,
    detuning_axis: Sequence[float],
    horizon: Optional[float] = None,
    step: float = QUADRATURE_STEP,
) -> np.ndarray:
    """
    Mode spectrum from direct quadrature of the double time integral over [0, T]^2.

    The tensor-product Simpson rule of the double integral is the squared
    modulus of the one-dimensional rule, so each sample costs one pass over
    the time grid. ``horizon`` defaults to 50 over the slowest damping rate
    magnitude min |Re lambda|.
    """
    residues = mode_residues(solution, which)
    decay = -solution.lambdas.real
    if np.any(decay <= 0.0):
        raise NonDecayingModeError("non-decaying mode: spectrum undefined")
    T = HORIZON_DECAYS / float(decay.min()) if horizon is None else float(horizon)
    count = 2 * int(np.ceil(T / (2 * step))) + 1
    times = np.linspace(0.0, T, count)
    amplitude = residues @ np.exp(np.outer(solution.lambdas, times))

    detuning = np.atleast_1d(np.asarray(detuning_axis, dtype=float))
    values = np.empty(detuning.size)
    for index, d in enumerate(detuning):
        transform = integrate.simpson(amplitude * np.exp(1j * d * times), x=times)
        values[index] = abs(transform) ** 2
    logger.debug("truncated quadrature: horizon=%g samples=%d", T, count)
    return values
