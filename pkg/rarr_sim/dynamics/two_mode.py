"""
Residue-form amplitudes of the two-mode system.

Every amplitude is C_K(t) = sum_n c_n^(K) exp(lambda_n t). The residues are
the first column of adj(lambda_n I - M) divided by p'(lambda_n), which
projects the initial state |E> onto the n-th eigenvector.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..eigen import EigenTriple, characteristic_cubic, solve_cubic
from ..errors import DegenerateSpectrumError, NumericalError, ParameterError
from ..models import SystemParams, ensure_valid

logger = logging.getLogger(__name__)

SELF_CHECK_TOL = 1e-10


@dataclass(frozen=True)
class ResidueSolution:
    """Eigenvalues plus the residues of C_E, C_G and C_F."""

    eigen: EigenTriple
    residues_E: np.ndarray
    residues_G: np.ndarray
    residues_F: np.ndarray

    @property
    def lambdas(self) -> np.ndarray:
        return self.eigen.as_array()

    @property
    def residues(self) -> np.ndarray:
        """Residues stacked as rows E, G, F."""
        return np.vstack([self.residues_E, self.residues_G, self.residues_F])

    def amplitudes(self, t) -> np.ndarray:
        """
        Evaluate C_E, C_G, C_F at the given times.

        Args:
            t: Scalar or 1-D array of times

        Returns:
            Complex array of shape (3, len(t))
        """
        times = np.atleast_1d(np.asarray(t, dtype=float))
        return self.residues @ np.exp(np.outer(self.lambdas, times))


def solve_two_mode(params: SystemParams, quiet: bool = False) -> ResidueSolution:
    """
    Compute the residue solution for the initial state |E>.

    Args:
        params: Validated parameter set (lossless or lossy)
        quiet: Skip logging of validation warnings

    Returns:
        Eigenvalues and residues of the three amplitudes

    Raises:
        DegenerateSpectrumError: If two eigenvalues coincide
        NumericalError: If a residue self-check fails
    """
    coeffs = characteristic_cubic(params, quiet=quiet)
    eigen = solve_cubic(coeffs)
    if eigen.coincident:
        raise DegenerateSpectrumError("degenerate spectrum: residue form invalid")

    lam = eigen.as_array()
    derivative = coeffs.derivative(lam)
    products = np.array([np.prod([lam[n] - lam[m] for m in range(3) if m != n]) for n in range(3)])
    mismatch = np.abs(derivative - products)
    if np.any(mismatch > SELF_CHECK_TOL * np.maximum(1.0, np.abs(products))):
        raise NumericalError(f"p'(lambda) does not match the root products (mismatch={mismatch.max():.3e})")

    k = params.kappa / 2
    d = complex(-k, params.delta_omega)
    residues_E = (lam + k) * (lam - d) / derivative
    residues_G = -1j * params.g_a * (lam - d) / derivative
    residues_F = -1j * params.g_b * (lam + k) / derivative

    initial = np.array([residues_E.sum(), residues_G.sum(), residues_F.sum()])
    size = max(1.0, float(np.abs(residues_E).sum() + np.abs(residues_G).sum() + np.abs(residues_F).sum()))
    if np.max(np.abs(initial - np.array([1.0, 0.0, 0.0]))) > SELF_CHECK_TOL * size:
        raise NumericalError("residues do not reproduce the initial state |E>")

    logger.debug("two-mode residues: lambdas=%s", lam)
    return ResidueSolution(eigen=eigen, residues_E=residues_E, residues_G=residues_G, residues_F=residues_F)


def raman_resonance_amplitudes(params: SystemParams, t) -> np.ndarray:
    """
    Closed-form amplitudes at exact Raman resonance without losses.

    C_E = cos(W t), C_G = -i (g_a/W) sin(W t), C_F = -i (g_b/W) sin(W t)
    with W**2 = g_a**2 + g_b**2.

    Raises:
        ParameterError: Unless delta_omega == 0 and gamma == kappa == 0
    """
    ensure_valid(params, quiet=True)
    if params.delta_omega != 0.0 or not params.lossless:
        raise ParameterError("Raman-resonance closed form needs delta_omega = 0 and no losses")
    times = np.atleast_1d(np.asarray(t, dtype=float))
    rabi = np.hypot(params.g_a, params.g_b)
    sine = np.sin(rabi * times)
    return np.vstack([
        np.cos(rabi * times) + 0j,
        -1j * params.g_a / rabi * sine,
        -1j * params.g_b / rabi * sine,
    ])
