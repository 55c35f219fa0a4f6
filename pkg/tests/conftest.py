"""
Shared fixtures.
"""

from pathlib import Path

import numpy as np
import pytest

from rarr_sim.base import TaskOutput
from rarr_sim.cli.config import GridSpec, RunConfig
from rarr_sim.cli.output import render_table
from rarr_sim.dynamics import TRAJECTORY_COLUMNS, sample_trajectory
from rarr_sim.models import SystemParams
from rarr_sim.oracle import OdeSystem, integrate

ORACLE_GOLDEN = Path(__file__).parent / "data" / "oracle_rarr_trajectory.txt"
ORACLE_TOLERANCE = 1e-11


def write_oracle_golden(path: Path) -> None:
    """Integrate the lossy RARR case to t = 100 and store it in the trajectory table format."""
    params = SystemParams(g_a=1.0, g_b=0.1, delta_omega=1.0, gamma=0.05, kappa=0.07)
    config = RunConfig(task="trajectory", params=params, grid=GridSpec(start=0.0, stop=100.0, count=1001))
    run = integrate(OdeSystem.from_two_mode(params), config.grid.stop, tolerance=ORACLE_TOLERANCE)
    trajectory = sample_trajectory(run, config.grid.values())
    summary = {"source": "oracle", "tolerance": ORACLE_TOLERANCE, "steps": run.n_steps}
    output = TaskOutput(columns=TRAJECTORY_COLUMNS, rows=trajectory.as_columns(), summary=summary)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_table(output, config), encoding="utf-8")


@pytest.fixture(scope="session")
def oracle_golden():
    """Header text, run configuration and table of the stored oracle trajectory."""
    # regenerate by deleting the file
    if not ORACLE_GOLDEN.exists():
        write_oracle_golden(ORACLE_GOLDEN)
    text = ORACLE_GOLDEN.read_text(encoding="utf-8")
    return text, RunConfig.from_header(text), np.loadtxt(ORACLE_GOLDEN)
