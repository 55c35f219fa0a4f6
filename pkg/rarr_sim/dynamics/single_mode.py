"""
Closed-form amplitudes of the emitter in a single lossy cavity mode.

The printed damped-Rabi form

    C_E(t) = (g_a/W) cos(W t + phi) exp(-(kappa + Gamma) t / 4)
    C_G(t) = -i (g_a/W) sin(W t) exp(-(kappa + Gamma) t / 4)
    W**2   = g_a**2 - ((kappa - Gamma - 2i dw_a) / 4)**2
    tan(phi) = -(kappa - Gamma + 2i dw_a) / (4 W)

is used whenever it reproduces C_E(0) = 1 and dC_E/dt(0) = -Gamma/2.
Otherwise the residue form of the 2x2 system

    dC_E/dt = -(Gamma/2) C_E - i g_a C_G
    dC_G/dt = -(kappa/2 + i dw_a) C_G - i g_a C_E

is evaluated instead and the reason is kept in ``note``.
"""

import cmath
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateSpectrumError
from ..models import SingleModeParams, ensure_valid

logger = logging.getLogger(__name__)

CONFORMANCE_TOL = 1e-10
PRINTED = "printed"
RESIDUE = "residue"


@dataclass(frozen=True)
class SingleModeSolution:
    """Amplitudes C_E, C_G of the one-mode system as functions of time."""

    params: SingleModeParams
    rabi_frequency: complex
    phase: complex
    convention: str
    note: str
    lambdas: np.ndarray
    residues_E: np.ndarray
    residues_G: np.ndarray

    @property
    def residues(self) -> np.ndarray:
        return np.vstack([self.residues_E, self.residues_G])

    def c_e(self, t) -> np.ndarray:
        return self.amplitudes(t)[0]

    def c_g(self, t) -> np.ndarray:
        return self.amplitudes(t)[1]

    def amplitudes(self, t) -> np.ndarray:
        """Complex array of shape (2, len(t)) holding C_E and C_G."""
        times = np.atleast_1d(np.asarray(t, dtype=float))
        if self.convention == RESIDUE:
            return self.residues @ np.exp(np.outer(self.lambdas, times))
        p = self.params
        envelope = np.exp(-(p.kappa + p.gamma) * times / 4)
        ratio = p.g_a / self.rabi_frequency
        return np.vstack([
            ratio * np.cos(self.rabi_frequency * times + self.phase) * envelope,
            -1j * ratio * np.sin(self.rabi_frequency * times) * envelope,
        ])


def solve_single_mode(params: SingleModeParams) -> SingleModeSolution:
    """
    Solve the one-mode dynamics for the initial state |E>.

    Args:
        params: Validated single-mode parameters

    Returns:
        Solution evaluating the printed closed form when it conforms to the
        initial conditions, the 2x2 residue form otherwise

    Raises:
        DegenerateSpectrumError: If the two eigenvalues coincide (W = 0)
    """
    ensure_valid(params)
    g, dw = params.g_a, params.delta_omega_a
    gamma, kappa = params.gamma, params.kappa

    rabi = cmath.sqrt(g ** 2 - ((kappa - gamma - 2j * dw) / 4) ** 2)
    if abs(rabi) < 1e-12 * max(1.0, g):
        raise DegenerateSpectrumError("degenerate 2x2 spectrum")
    phase = cmath.atan(-(kappa - gamma + 2j * dw) / (4 * rabi))

    m11 = -(kappa / 2 + 1j * dw)
    lambdas = _eigenvalues(-gamma / 2, m11, g)
    if abs(lambdas[0] - lambdas[1]) < 1e-12 * max(1.0, g):
        raise DegenerateSpectrumError("degenerate 2x2 spectrum")
    gap = lambdas - lambdas[::-1]
    residues_E = (lambdas - m11) / gap
    residues_G = -1j * g / gap

    # printed-form checks at t = 0
    c_e0 = g / rabi * cmath.cos(phase)
    dc_e0 = -g * cmath.sin(phase) - (kappa + gamma) / 4 * c_e0
    conforms = abs(c_e0 - 1) <= CONFORMANCE_TOL and abs(dc_e0 + gamma / 2) <= CONFORMANCE_TOL
    if conforms:
        convention, note = PRINTED, "printed closed form satisfies C_E(0)=1 and dC_E/dt(0)=-Gamma/2"
    else:
        convention = RESIDUE
        note = (
            f"printed closed form fails the initial-condition check "
            f"(C_E(0)={c_e0:.6g}, dC_E/dt(0)={dc_e0:.6g}); using the 2x2 residue form"
        )
    logger.info("single-mode solution: convention=%s", convention)

    return SingleModeSolution(
        params=params,
        rabi_frequency=rabi,
        phase=phase,
        convention=convention,
        note=note,
        lambdas=lambdas,
        residues_E=residues_E,
        residues_G=residues_G,
    )


def _eigenvalues(m00: complex, m11: complex, g: float) -> np.ndarray:
    # roots of (m00 - lambda)(m11 - lambda) + g^2
    mean = (m00 + m11) / 2
    split = cmath.sqrt(((m00 - m11) / 2) ** 2 - g ** 2)
    return np.array([mean + split, mean - split])
