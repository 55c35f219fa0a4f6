"""
Total emission probabilities along the Raman detuning.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..dynamics import solve_two_mode
from ..errors import NumericalError, ParameterError, UndefinedTotalError
from ..models import SystemParams, ensure_valid
from ..parallel import ordered_map
from .probabilities import CHANNELS, EmissionProbabilities, emission_probabilities

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ("delta_omega",) + CHANNELS + ("sum",)


@dataclass(frozen=True)
class EmissionSweep:
    """
    Totals per detuning. Rows of ``probabilities`` that failed are NaN and
    the reason is kept in ``failures``.
    """

    detuning: np.ndarray
    probabilities: np.ndarray
    failures: Dict[float, str] = field(default_factory=dict)

    @property
    def p1(self) -> np.ndarray:
        return self.probabilities[:, 0]

    @property
    def p2(self) -> np.ndarray:
        return self.probabilities[:, 1]

    @property
    def p3(self) -> np.ndarray:
        return self.probabilities[:, 2]

    @property
    def total(self) -> np.ndarray:
        return self.probabilities.sum(axis=1)

    def __len__(self) -> int:
        return self.detuning.size

    def __getitem__(self, index: int) -> Optional[EmissionProbabilities]:
        row = self.probabilities[index]
        if np.isnan(row).any():
            return None
        return EmissionProbabilities(p1=float(row[0]), p2=float(row[1]), p3=float(row[2]), t=math.inf)

    def as_columns(self) -> np.ndarray:
        return np.column_stack([self.detuning, self.probabilities, self.total])


@dataclass(frozen=True)
class SweepSummary:
    """Location and size of the mode-b emission maximum."""

    peak_detuning: float
    peak_p3: float
    p3_at_raman_resonance: float
    enhancement: float
    failed_points: int

    def as_dict(self) -> Dict[str, Union[float, int]]:
        return {
            "peak_detuning": self.peak_detuning,
            "peak_p3": self.peak_p3,
            "p3_at_raman_resonance": self.p3_at_raman_resonance,
            "enhancement": self.enhancement,
            "failed_points": self.failed_points,
        }


def _totals_at(params: SystemParams, delta_omega: float) -> Union[Tuple[float, float, float], str]:
    detuned = params.with_detuning(delta_omega)
    try:
        return emission_probabilities(solve_two_mode(detuned, quiet=True), detuned).as_tuple()
    except NumericalError as exc:
        return str(exc)


def sweep_emission(
    params: SystemParams,
    detuning_grid: Sequence[float],
    workers: Optional[int] = None,
) -> EmissionSweep:
    """
    Compute the total channel probabilities at every detuning of a grid.

    Points whose spectrum is degenerate (or otherwise fail numerically) are
    recorded as gaps instead of aborting the sweep.

    Args:
        params: Lossy parameter set; its own ``delta_omega`` is ignored
        detuning_grid: Ordered detuning values
        workers: Worker processes

    Returns:
        Sweep ordered as the grid

    Raises:
        UndefinedTotalError: If the system has no decay channel
    """
    grid = np.asarray(detuning_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ParameterError("detuning grid must be a non-empty 1-D sequence")
    ensure_valid(params)
    if params.lossless:
        raise UndefinedTotalError("no decay channels: total probabilities undefined")

    results = ordered_map(partial(_totals_at, params), grid.tolist(), workers)

    probabilities = np.full((grid.size, 3), np.nan)
    failures: Dict[float, str] = {}
    for index, result in enumerate(results):
        if isinstance(result, str):
            failures[float(grid[index])] = result
            logger.warning("emission sweep gap: delta_omega=%g reason=%s", grid[index], result)
        else:
            probabilities[index] = result

    logger.info("emission sweep finished: points=%d gaps=%d", grid.size, len(failures))
    return EmissionSweep(detuning=grid, probabilities=probabilities, failures=failures)


def summarize_sweep(sweep: EmissionSweep, params: SystemParams) -> SweepSummary:
    """
    Summarize a sweep by its mode-b maximum and the enhancement over the
    Raman-resonant value p3(delta_omega = 0), which is solved directly.
    """
    if np.all(np.isnan(sweep.p3)):
        raise NumericalError("emission sweep has no valid points")
    peak = int(np.nanargmax(sweep.p3))
    resonant = params.with_detuning(0.0)
    p3_zero = emission_probabilities(solve_two_mode(resonant, quiet=True), resonant).p3
    peak_p3 = float(sweep.p3[peak])
    return SweepSummary(
        peak_detuning=float(sweep.detuning[peak]),
        peak_p3=peak_p3,
        p3_at_raman_resonance=p3_zero,
        enhancement=peak_p3 / p3_zero if p3_zero > 0 else math.inf,
        failed_points=len(sweep.failures),
    )
