"""
Channel emission probabilities from the residue form.

With C_K(t) = sum_n c_n exp(lambda_n t) the time integral of |C_K|^2 is the
double sum sum_{n,m} c_n conj(c_m) I_nm with z = lambda_n + conj(lambda_m) and

    I_nm(T) = (exp(z T) - 1) / z    (T itself when |z| < 1e-12)
    I_nm(oo) = -1 / z

The three channels are the side loss p1 = Gamma int |C_E|^2 and the two
cavity outputs p2 = kappa int |C_G|^2, p3 = kappa int |C_F|^2.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import integrate as sp_integrate

from ..dynamics import ResidueSolution
from ..errors import ParameterError, UndefinedTotalError
from ..models import SystemParams, ensure_valid
from ..oracle import OdeSystem, integrate

logger = logging.getLogger(__name__)

SMALL_EXPONENT = 1e-12
# residue products below this carry no weight at a non-decaying pole
NEGLIGIBLE_WEIGHT = 1e-14

CHANNELS = ("p1", "p2", "p3")


@dataclass(frozen=True)
class EmissionProbabilities:
    """First-photon emission probabilities up to ``t`` (``math.inf`` for totals)."""

    p1: float
    p2: float
    p3: float
    t: float

    @property
    def total(self) -> float:
        return self.p1 + self.p2 + self.p3

    @property
    def is_total(self) -> bool:
        return math.isinf(self.t)

    def as_tuple(self):
        return tuple(getattr(self, channel) for channel in CHANNELS)


@dataclass(frozen=True)
class EmissionCurve:
    """Time-resolved channel probabilities p_i(t) on a grid."""

    t: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    p3: np.ndarray

    @property
    def total(self) -> np.ndarray:
        return self.p1 + self.p2 + self.p3


def _rates(params: SystemParams) -> np.ndarray:
    return np.array([params.gamma, params.kappa, params.kappa])


def _weights(solution: ResidueSolution) -> np.ndarray:
    # (3 amplitudes, n, m) products c_n conj(c_m)
    c = solution.residues
    return c[:, :, None] * c.conj()[:, None, :]


def _exponents(solution: ResidueSolution) -> np.ndarray:
    lam = solution.lambdas
    return lam[:, None] + lam.conj()[None, :]


def _finite_integrals(z: np.ndarray, horizon: np.ndarray) -> np.ndarray:
    """I_nm(T) for every T in ``horizon``; shape (len(horizon), 3, 3)."""
    T = horizon[:, None, None]
    small = np.abs(z) < SMALL_EXPONENT
    safe = np.where(small, 1.0, z)
    return np.where(small, T + 0j, np.expm1(safe * T) / safe)


def _infinite_integrals(z: np.ndarray, weights: np.ndarray) -> np.ndarray:
    small = np.abs(z) < SMALL_EXPONENT
    if np.any(small & np.any(np.abs(weights) > NEGLIGIBLE_WEIGHT, axis=0)):
        raise UndefinedTotalError("non-decaying component: total probabilities undefined")
    return np.where(small, 0.0, -1.0 / np.where(small, 1.0, z))


def _probabilities(weights: np.ndarray, integrals: np.ndarray, rates: np.ndarray) -> np.ndarray:
    # integrals may carry a leading time axis
    occupancy = np.einsum("knm,...nm->...k", weights, integrals).real
    values = rates * occupancy
    # zero-rate channels emit nothing; roundoff can push tiny values below zero
    values = np.where(rates == 0.0, 0.0, values)
    return np.clip(values, 0.0, None)


def emission_probabilities(
    solution: ResidueSolution, params: SystemParams, t: float = math.inf
) -> EmissionProbabilities:
    """
    Integrate the channel probabilities analytically up to ``t``.

    Args:
        solution: Residue solution for ``params``
        params: Parameter set providing the decay rates
        t: Time horizon, ``math.inf`` for the total probabilities

    Returns:
        The three channel probabilities

    Raises:
        UndefinedTotalError: If ``t`` is infinite and the system has no
            decay channel, or a populated mode never decays
    """
    if t < 0:
        raise ParameterError(f"time horizon must be non-negative, got {t}")
    weights = _weights(solution)
    z = _exponents(solution)
    if math.isinf(t):
        if params.lossless:
            raise UndefinedTotalError("no decay channels: total probabilities undefined")
        integrals = _infinite_integrals(z, weights)
    else:
        integrals = _finite_integrals(z, np.array([float(t)]))[0]
    p1, p2, p3 = _probabilities(weights, integrals, _rates(params))
    return EmissionProbabilities(p1=float(p1), p2=float(p2), p3=float(p3), t=float(t))


def emission_curve(
    solution: ResidueSolution, params: SystemParams, time_grid: Sequence[float]
) -> EmissionCurve:
    """Evaluate p_i(t) at every time of a non-negative grid."""
    t = np.asarray(time_grid, dtype=float)
    if t.ndim != 1 or (t.size and t.min() < 0):
        raise ParameterError("time grid must be a non-negative 1-D sequence")
    integrals = _finite_integrals(_exponents(solution), t)
    values = _probabilities(_weights(solution), integrals, _rates(params))
    return EmissionCurve(t=t, p1=values[:, 0], p2=values[:, 1], p3=values[:, 2])


def quadrature_probabilities(
    params: SystemParams, t_end: float, tolerance: float = 1e-9
) -> EmissionProbabilities:
    """
    Channel probabilities up to ``t_end`` from adaptive quadrature of an
    independently integrated trajectory.

    Used to cross-check :func:`emission_probabilities`; no residue enters.
    """
    ensure_valid(params, quiet=True)
    trajectory = integrate(OdeSystem.from_two_mode(params), t_end, tolerance=tolerance)
    breakpoints = np.linspace(0.0, t_end, 1 + max(1, int(math.ceil(t_end))))[1:-1]

    def occupation(time: float, row: int) -> float:
        return float(abs(trajectory(time)[row, 0]) ** 2)

    values = []
    for row, rate in enumerate(_rates(params)):
        if rate == 0.0:
            values.append(0.0)
            continue
        area, _ = sp_integrate.quad(
            occupation, 0.0, t_end, args=(row,), points=breakpoints, limit=10 * breakpoints.size + 50,
            epsabs=1e-12, epsrel=1e-10,
        )
        values.append(rate * area)
    logger.debug("quadrature probabilities: t_end=%g steps=%d", t_end, trajectory.n_steps)
    return EmissionProbabilities(p1=values[0], p2=values[1], p3=values[2], t=float(t_end))
