"""
Time-integrated emission spectra from one-sided residue transforms.

The double time integral of C(t) conj(C(t')) exp(i D (t - t')) factorizes
into |F(D)|^2 with

    F(D) = int_0^oo C(t) exp(i D t) dt = sum_n c_n / (-lambda_n - i D),

so a mode spectrum costs one residue sum per sample. Mode a is carried by
C_G and mode b by C_F.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple, Union

import numpy as np

from ..dynamics import ResidueSolution, SingleModeSolution
from ..errors import NonDecayingModeError, ParameterError
from ..models import SystemParams, validate
from .peaks import Peak, detect_peaks, summarize_peaks

logger = logging.getLogger(__name__)

MODES = ("a", "b")
SPECTRUM_COLUMNS = ("omega", "s_a", "s_b", "s_total")

Solution = Union[ResidueSolution, SingleModeSolution]


@dataclass(frozen=True)
class SpectrumGrid:
    """Sampled total spectrum with its two mode components and their peaks."""

    omega_axis: np.ndarray
    s_a: np.ndarray
    s_b: np.ndarray
    s_total: np.ndarray
    peaks: Dict[str, Tuple[Peak, ...]] = field(default_factory=dict)

    def as_columns(self) -> np.ndarray:
        return np.column_stack([self.omega_axis, self.s_a, self.s_b, self.s_total])


def _require_decay(solution: Solution) -> None:
    if np.any(solution.lambdas.real >= 0.0):
        raise NonDecayingModeError("non-decaying mode: spectrum undefined")


def mode_residues(solution: Solution, which: str) -> np.ndarray:
    if which not in MODES:
        raise ParameterError(f"unknown mode {which!r}; expected one of {MODES}")
    if which == "a":
        return solution.residues_G
    if not isinstance(solution, ResidueSolution):
        raise ParameterError("the single-mode system has no b mode")
    return solution.residues_F


def residue_transform(solution: Solution, which: str, detuning_axis) -> np.ndarray:
    """One-sided Fourier transform F(D) of the mode amplitude at each detuning."""
    _require_decay(solution)
    residues = mode_residues(solution, which)
    detuning = np.atleast_1d(np.asarray(detuning_axis, dtype=float))
    poles = -solution.lambdas[None, :] - 1j * detuning[:, None]
    return (residues[None, :] / poles).sum(axis=1)


def mode_spectrum(solution: ResidueSolution, which: str, detuning_axis: Sequence[float]) -> np.ndarray:
    """
    Spectral density |F(D)|^2 of one cavity mode.

    Args:
        solution: Residue solution with all eigenvalues decaying
        which: ``"a"`` or ``"b"``
        detuning_axis: Samples of D = omega - omega_mode

    Raises:
        NonDecayingModeError: If any eigenvalue has a non-negative real part
    """
    return np.abs(residue_transform(solution, which, detuning_axis)) ** 2


def single_mode_spectrum(solution: SingleModeSolution, detuning_axis: Sequence[float]) -> np.ndarray:
    """Vacuum-Rabi doublet of the one-mode cavity, |F(D)|^2 for C_G."""
    return np.abs(residue_transform(solution, "a", detuning_axis)) ** 2


def full_spectrum(
    solution: ResidueSolution, params: SystemParams, omega_axis: Sequence[float]
) -> SpectrumGrid:
    """
    Assemble S = kappa/(2 pi) (S_a + S_b) on an absolute frequency axis.

    The mode components are centred on ``omega_a`` and ``omega_b``; with
    both carriers at zero the axis is a detuning axis shared by both modes.
    Peaks are detected on each component separately.
    """
    omega = np.asarray(omega_axis, dtype=float)
    if omega.ndim != 1 or omega.size < 2:
        raise ParameterError("frequency axis must hold at least two samples")
    if np.any(np.diff(omega) <= 0.0):
        raise ParameterError("frequency axis must be strictly increasing")
    if params.has_carriers and not validate(params).separable:
        logger.warning("mode spectra overlap: omega_a - omega_b=%g", params.omega_a - params.omega_b)

    s_a = mode_spectrum(solution, "a", omega - params.omega_a)
    s_b = mode_spectrum(solution, "b", omega - params.omega_b)
    s_total = params.kappa / (2 * np.pi) * (s_a + s_b)
    peaks = {mode: detect_peaks(omega, component) for mode, component in zip(MODES, (s_a, s_b))}
    logger.info(
        "spectrum computed: samples=%d peaks_a=%d peaks_b=%d", omega.size, len(peaks["a"]), len(peaks["b"])
    )
    return SpectrumGrid(omega_axis=omega, s_a=s_a, s_b=s_b, s_total=s_total, peaks=peaks)


def peak_summary(grid: SpectrumGrid) -> Dict[str, object]:
    """Count, locations and heights of the peaks of each component."""
    return dict(summarize_peaks(grid.peaks))
