"""
Linear amplitude systems dC/dt = M C assembled entry by entry.

Nothing here goes through the characteristic polynomial or the residues;
the matrices are written down directly from the equations of motion.
"""

from dataclasses import dataclass

import numpy as np

from ..models import SingleModeParams, SystemParams, ensure_valid


@dataclass(frozen=True)
class OdeSystem:
    """Coefficient matrix and the fixed initial state |E>."""

    dimension: int
    matrix: np.ndarray
    initial_state: np.ndarray

    @classmethod
    def from_two_mode(cls, params: SystemParams) -> "OdeSystem":
        """
        Three-amplitude system

            dC_E/dt = -(Gamma/2) C_E - i g_a C_G - i g_b C_F
            dC_G/dt = -(kappa/2) C_G - i g_a C_E
            dC_F/dt = (i dw - kappa/2) C_F - i g_b C_E
        """
        ensure_valid(params, quiet=True)
        matrix = np.zeros((3, 3), dtype=complex)
        matrix[0, 0] = -params.gamma / 2
        matrix[0, 1] = matrix[1, 0] = -1j * params.g_a
        matrix[0, 2] = matrix[2, 0] = -1j * params.g_b
        matrix[1, 1] = -params.kappa / 2
        matrix[2, 2] = 1j * params.delta_omega - params.kappa / 2
        return cls(dimension=3, matrix=matrix, initial_state=np.array([1, 0, 0], dtype=complex))

    @classmethod
    def from_single_mode(cls, params: SingleModeParams) -> "OdeSystem":
        """Two-amplitude system of the emitter in one detuned lossy mode."""
        ensure_valid(params, quiet=True)
        matrix = np.zeros((2, 2), dtype=complex)
        matrix[0, 0] = -params.gamma / 2
        matrix[0, 1] = matrix[1, 0] = -1j * params.g_a
        matrix[1, 1] = -(params.kappa / 2 + 1j * params.delta_omega_a)
        return cls(dimension=2, matrix=matrix, initial_state=np.array([1, 0], dtype=complex))

    def anti_hermitian_defect(self) -> float:
        """Frobenius norm of M + M^dagger; zero for lossless systems."""
        return float(np.linalg.norm(self.matrix + self.matrix.conj().T))

    def rhs(self, t: float, y: np.ndarray) -> np.ndarray:
        return self.matrix @ y
