"""
Front-end tasks, one per subcommand.
"""

import logging
from typing import Dict, List, Type

import numpy as np

from ..base import BaseTask, TaskOutput
from ..dynamics import (
    TRAJECTORY_COLUMNS,
    Trajectory,
    sample_trajectory,
    solve_single_mode,
    solve_two_mode,
)
from ..eigen import BRANCH_LABELS, EigenTriple, avoided_crossing, sweep_eigenvalues
from ..emission import SWEEP_COLUMNS, EmissionSweep, summarize_sweep, sweep_emission
from ..errors import ParameterError
from ..models import SingleModeParams, SystemParams, ensure_valid
from ..spectrum import SPECTRUM_COLUMNS, SpectrumGrid, full_spectrum, peak_summary

logger = logging.getLogger(__name__)


class _TwoModeTask(BaseTask):
    needs_losses = False

    def _validate_config(self) -> None:
        params = self.config.params
        if not isinstance(params, SystemParams):
            raise ParameterError(f"task {self.name} needs two-mode parameters")
        ensure_valid(params)
        if self.needs_losses and params.lossless:
            raise ParameterError(f"task {self.name} needs gamma > 0 or kappa > 0")

    @property
    def params(self) -> SystemParams:
        return self.config.params


class EigenSweepTask(_TwoModeTask):
    """Branch-labelled eigenvalues along the Raman detuning."""

    name = "eigen-sweep"

    def compute(self) -> List[EigenTriple]:
        return sweep_eigenvalues(self.params, self.config.grid.values(), workers=self.config.workers)

    def to_table(self, result: List[EigenTriple]) -> TaskOutput:
        grid = self.config.grid.values()
        lambdas = np.array([triple.as_array() for triple in result])
        columns = ["delta_omega"]
        parts = [grid]
        for index, label in enumerate(BRANCH_LABELS):
            columns.extend([f"re_{label}", f"im_{label}"])
            parts.extend([lambdas[:, index].real, lambdas[:, index].imag])
        crossing = avoided_crossing(result, grid)
        summary = {
            "avoided_crossing.gap": crossing.gap,
            "avoided_crossing.delta_omega": crossing.detuning,
            "avoided_crossing.branches": list(crossing.branches),
        }
        return TaskOutput(columns=tuple(columns), rows=np.column_stack(parts), summary=summary)


class TrajectoryTask(_TwoModeTask):
    """Occupation dynamics of the two-mode system."""

    name = "trajectory"

    def compute(self) -> Trajectory:
        return sample_trajectory(solve_two_mode(self.params, quiet=True), self.config.grid.values())

    def to_table(self, result: Trajectory) -> TaskOutput:
        summary = {
            "max_occ_F": float(result.occ_F.max()),
            "t_max_occ_F": float(result.t[int(np.argmax(result.occ_F))]),
            "norm_min": float(result.norm.min()),
            "norm_max": float(result.norm.max()),
        }
        return TaskOutput(columns=TRAJECTORY_COLUMNS, rows=result.as_columns(), summary=summary)


class EmissionSweepTask(_TwoModeTask):
    """Total channel probabilities along the Raman detuning."""

    name = "emission-sweep"
    needs_losses = True

    def compute(self) -> EmissionSweep:
        return sweep_emission(self.params, self.config.grid.values(), workers=self.config.workers)

    def to_table(self, result: EmissionSweep) -> TaskOutput:
        summary = summarize_sweep(result, self.params).as_dict()
        return TaskOutput(columns=SWEEP_COLUMNS, rows=result.as_columns(), summary=summary)


class SpectrumTask(_TwoModeTask):
    """Time-integrated cavity-output spectrum."""

    name = "spectrum"
    needs_losses = True

    def frequency_axis(self) -> np.ndarray:
        """The grid window around each carrier merged into one ordered axis, or a plain detuning axis."""
        window = self.config.grid.values()
        params = self.params
        if not params.has_carriers or params.omega_a == params.omega_b:
            return window + params.omega_a
        axis = np.union1d(params.omega_a + window, params.omega_b + window)
        # overlapping windows leave pairs that differ only by rounding
        spacing = (window[-1] - window[0]) / (window.size - 1)
        keep = np.concatenate([[True], np.diff(axis) > 1e-9 * spacing])
        return axis[keep]

    def compute(self) -> SpectrumGrid:
        return full_spectrum(solve_two_mode(self.params, quiet=True), self.params, self.frequency_axis())

    def to_table(self, result: SpectrumGrid) -> TaskOutput:
        columns = SPECTRUM_COLUMNS if self.params.has_carriers else ("delta",) + SPECTRUM_COLUMNS[1:]
        return TaskOutput(columns=columns, rows=result.as_columns(), summary=peak_summary(result))


class SingleModeTask(BaseTask):
    """Damped vacuum-Rabi dynamics of the one-mode cavity."""

    name = "single-mode"

    def _validate_config(self) -> None:
        if not isinstance(self.config.params, SingleModeParams):
            raise ParameterError("task single-mode needs single-mode parameters")
        ensure_valid(self.config.params)

    def compute(self):
        solution = solve_single_mode(self.config.params)
        return solution, sample_trajectory(solution, self.config.grid.values())

    def to_table(self, result) -> TaskOutput:
        solution, trajectory = result
        table = trajectory.as_columns()
        # the F amplitude is identically zero here
        keep = [i for i, name in enumerate(TRAJECTORY_COLUMNS) if not name.endswith("_F")]
        summary = {
            "convention": solution.convention,
            "rabi_frequency.re": solution.rabi_frequency.real,
            "rabi_frequency.im": solution.rabi_frequency.imag,
            "note": solution.note,
        }
        return TaskOutput(
            columns=tuple(TRAJECTORY_COLUMNS[i] for i in keep),
            rows=table[:, keep],
            summary=summary,
        )


TASKS: Dict[str, Type[BaseTask]] = {
    task.name: task
    for task in (EigenSweepTask, TrajectoryTask, EmissionSweepTask, SpectrumTask, SingleModeTask)
}
