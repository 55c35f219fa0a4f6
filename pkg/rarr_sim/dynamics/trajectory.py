"""
Time sampling of closed-form solutions and oracle runs.
"""

from dataclasses import dataclass
from typing import Iterator, Protocol, Sequence, overload

import numpy as np

from ..errors import ParameterError


class AmplitudeSource(Protocol):
    """Anything that evaluates the amplitude rows on a time array, oracle runs included."""

    def amplitudes(self, t) -> np.ndarray: ...


@dataclass(frozen=True)
class TrajectorySample:
    """Amplitudes and occupations at one instant."""

    t: float
    amp_E: complex
    amp_G: complex
    amp_F: complex
    occ_E: float
    occ_G: float
    occ_F: float
    norm: float


class Trajectory(Sequence[TrajectorySample]):
    """
    Column-oriented trajectory that also behaves as a sequence of samples.

    ``amplitudes`` has shape (3, N) with rows E, G, F; single-mode solutions
    carry a zero F row.
    """

    def __init__(self, t: np.ndarray, amplitudes: np.ndarray):
        self.t = t
        self.amplitudes = amplitudes
        self.occupations = np.abs(amplitudes) ** 2
        self.norm = self.occupations.sum(axis=0)

    @property
    def occ_E(self) -> np.ndarray:
        return self.occupations[0]

    @property
    def occ_G(self) -> np.ndarray:
        return self.occupations[1]

    @property
    def occ_F(self) -> np.ndarray:
        return self.occupations[2]

    def __len__(self) -> int:
        return self.t.size

    @overload
    def __getitem__(self, index: int) -> TrajectorySample: ...

    @overload
    def __getitem__(self, index: slice) -> "Trajectory": ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Trajectory(self.t[index], self.amplitudes[:, index])
        amp = self.amplitudes[:, index]
        occ = self.occupations[:, index]
        return TrajectorySample(
            t=float(self.t[index]),
            amp_E=complex(amp[0]),
            amp_G=complex(amp[1]),
            amp_F=complex(amp[2]),
            occ_E=float(occ[0]),
            occ_G=float(occ[1]),
            occ_F=float(occ[2]),
            norm=float(self.norm[index]),
        )

    def __iter__(self) -> Iterator[TrajectorySample]:
        for index in range(len(self)):
            yield self[index]

    def as_columns(self) -> np.ndarray:
        """Real table with columns t, Re/Im of C_E, C_G, C_F, occ_E, occ_G, occ_F, norm."""
        parts = [self.t]
        for row in self.amplitudes:
            parts.extend([row.real, row.imag])
        parts.extend(list(self.occupations))
        parts.append(self.norm)
        return np.column_stack(parts)


TRAJECTORY_COLUMNS = (
    "t", "re_E", "im_E", "re_G", "im_G", "re_F", "im_F", "occ_E", "occ_G", "occ_F", "norm",
)


def sample_trajectory(solution: AmplitudeSource, time_grid: Sequence[float]) -> Trajectory:
    """
    Evaluate a closed-form solution on a time grid.

    Every point is evaluated independently from the residue sums; nothing is
    accumulated along the grid.

    Args:
        solution: Two-mode or single-mode solution, or an oracle ``DenseTrajectory``
        time_grid: Non-negative, non-decreasing times

    Returns:
        Trajectory with one sample per grid point

    Raises:
        ParameterError: If the grid has negative or decreasing times
    """
    t = np.asarray(time_grid, dtype=float)
    if t.ndim != 1:
        raise ParameterError("time grid must be a 1-D sequence")
    if t.size and t.min() < 0:
        raise ParameterError("time grid must be non-negative")
    if np.any(np.diff(t) < 0):
        raise ParameterError("time grid must be monotone non-decreasing")

    amplitudes = solution.amplitudes(t) if t.size else np.zeros((3, 0), dtype=complex)
    if amplitudes.shape[0] == 2:
        amplitudes = np.vstack([amplitudes, np.zeros(t.size, dtype=complex)])
    return Trajectory(t, amplitudes)
