"""
Branch-continuous eigenvalue sweeps over the Raman detuning.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import AmbiguousBranchError, ParameterError
from ..models import SystemParams, ensure_valid
from ..parallel import ordered_map
from .cubic import COINCIDENCE_TOL, EigenTriple, characteristic_cubic, solve_cubic

logger = logging.getLogger(__name__)

AMBIGUITY_TOL = 1e-9
_PERMUTATIONS = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True)
class CrossingGap:
    """Smallest separation between two branches over a sweep."""

    gap: float
    detuning: float
    branches: Tuple[str, str]


def _roots_at(params: SystemParams, delta_omega: float) -> EigenTriple:
    return solve_cubic(characteristic_cubic(params.with_detuning(delta_omega), quiet=True))


def sweep_eigenvalues(
    params: SystemParams,
    detuning_grid: Sequence[float],
    workers: Optional[int] = None,
) -> List[EigenTriple]:
    """
    Solve the characteristic cubic along a detuning grid and label branches.

    The first grid point is labelled by ascending imaginary part. Every later
    point is matched to the linear extrapolation of the branches through the
    two previous points (the previous point alone for the second one) by the
    minimum-total-distance assignment over the six pairings.

    Args:
        params: Parameter set; its own ``delta_omega`` is ignored
        detuning_grid: Strictly monotone detuning values
        workers: Worker processes for the root finding

    Returns:
        One branch-labelled triple per grid point

    Raises:
        ParameterError: If the grid is not strictly monotone
        AmbiguousBranchError: If two distinct pairings are equally close
    """
    grid = np.asarray(detuning_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ParameterError("detuning grid must be a non-empty 1-D sequence")
    steps = np.diff(grid)
    if grid.size > 1 and not (np.all(steps > 0) or np.all(steps < 0)):
        raise ParameterError("detuning grid must be strictly monotone")
    ensure_valid(params)

    raw = ordered_map(partial(_roots_at, params), grid.tolist(), workers)

    tracked = [raw[0]]
    for k in range(1, len(raw)):
        previous = tracked[k - 1].as_array()
        if k == 1:
            predicted = previous
        else:
            before = tracked[k - 2].as_array()
            ratio = (grid[k] - grid[k - 1]) / (grid[k - 1] - grid[k - 2])
            predicted = previous + (previous - before) * ratio
        order = _match(predicted, raw[k], float(grid[k]))
        tracked.append(raw[k].reordered(order))

    logger.info("eigenvalue sweep finished: points=%d", len(tracked))
    return tracked


def _match(predicted: np.ndarray, current: EigenTriple, detuning: float) -> Tuple[int, ...]:
    roots = current.as_array()
    costs = [float(np.sum(np.abs(roots[list(perm)] - predicted))) for perm in _PERMUTATIONS]
    best = int(np.argmin(costs))
    chosen = roots[list(_PERMUTATIONS[best])]
    spread = max(1.0, float(np.max(np.abs(roots))))

    for index, cost in enumerate(costs):
        if index == best or cost - costs[best] > AMBIGUITY_TOL:
            continue
        # swapping coincident roots changes nothing
        alternative = roots[list(_PERMUTATIONS[index])]
        if np.max(np.abs(alternative - chosen)) > COINCIDENCE_TOL * spread:
            raise AmbiguousBranchError("branch pairing is ambiguous", detuning)
    return _PERMUTATIONS[best]


def avoided_crossing(
    sweep: Sequence[EigenTriple],
    detuning_grid: Sequence[float],
    branches: Tuple[int, int] = (1, 2),
) -> CrossingGap:
    """
    Measure the minimum imaginary-part gap between two branches of a sweep.

    Args:
        sweep: Output of :func:`sweep_eigenvalues`
        detuning_grid: The grid the sweep was computed on
        branches: Zero-based branch indices; the default pair is lambda_2, lambda_3

    Returns:
        The smallest gap and the detuning where it occurs
    """
    i, j = branches
    gaps = np.array([abs(t.lambdas[j].imag - t.lambdas[i].imag) for t in sweep])
    at = int(np.argmin(gaps))
    labels = sweep[0].branch_labels
    return CrossingGap(gap=float(gaps[at]), detuning=float(detuning_grid[at]), branches=(labels[i], labels[j]))


def beat_frequency(triple: EigenTriple) -> float:
    """Slow exchange frequency Im(lambda_3 - lambda_2) / 2 of a labelled triple."""
    return (triple.lambdas[2].imag - triple.lambdas[1].imag) / 2
