"""
Run configuration of the command-line front end.
"""

from typing import Any, Dict, Literal, Mapping, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .. import keyvalue
from ..errors import ConfigError
from ..models import SingleModeParams, SystemParams, describe_validation_error

TaskName = Literal["eigen-sweep", "trajectory", "emission-sweep", "spectrum", "single-mode"]
TASK_NAMES = ("eigen-sweep", "trajectory", "emission-sweep", "spectrum", "single-mode")
OutputFormat = Literal["tab", "doc"]

# run-level keys; everything else in a config document is a parameter
RUN_KEYS = ("task", "grid", "format", "workers", "preset")
# header keys that describe the output rather than the run
HEADER_ONLY_KEYS = ("generator", "columns")


class GridSpec(BaseModel):
    """Uniform axis written as ``start:stop:count``."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    start: float = Field(..., description="First sample")
    stop: float = Field(..., description="Last sample, included")
    count: int = Field(..., description="Number of samples")

    @model_validator(mode="after")
    def _check_axis(self) -> "GridSpec":
        if self.count < 2:
            raise ValueError(f"grid count must be at least 2, got {self.count}")
        if not self.start < self.stop:
            raise ValueError(f"grid start must be below stop, got {self.start}:{self.stop}")
        return self

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """
        Parse ``start:stop:count``.

        Raises:
            ConfigError: If the text is not three fields or violates the axis rules
        """
        parts = text.strip().split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid must be written start:stop:count, got {text!r}")
        try:
            return cls(start=float(parts[0]), stop=float(parts[1]), count=int(parts[2]))
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise ConfigError(f"grid {text!r}: {describe_validation_error(exc)}") from exc
            raise ConfigError(f"grid {text!r}: {exc}") from exc

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    def __str__(self) -> str:
        return f"{self.start!r}:{self.stop!r}:{self.count}"


def default_grid(task: str, g_a: float) -> GridSpec:
    """Default axis of each task, scaled by the coupling g_a."""
    if task == "eigen-sweep":
        return GridSpec(start=0.0, stop=3.0 * g_a, count=600)
    if task in ("trajectory", "single-mode"):
        return GridSpec(start=0.0, stop=100.0 / g_a, count=2000)
    if task == "emission-sweep":
        return GridSpec(start=0.0, stop=3.0 * g_a, count=300)
    return GridSpec(start=-2.0 * g_a, stop=2.0 * g_a, count=4001)


class RunConfig(BaseModel):
    """One task with its parameters, axis and output destination."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    task: TaskName = Field(..., description="Computation to run")
    params: Union[SystemParams, SingleModeParams] = Field(..., description="Physical parameters")
    grid: GridSpec = Field(..., description="Detuning, time or frequency axis of the task")
    format: OutputFormat = Field("tab", description="Tabular text or structured document")
    out: Optional[str] = Field(None, description="Output path; standard output when unset")
    workers: int = Field(1, ge=1, description="Worker processes for sweeps")
    preset: Optional[str] = Field(None, description="Figure preset the configuration came from")

    @model_validator(mode="after")
    def _check_params(self) -> "RunConfig":
        expected = SingleModeParams if self.task == "single-mode" else SystemParams
        if not isinstance(self.params, expected):
            raise ValueError(f"task {self.task} needs {expected.__name__}")
        return self

    def to_key_values(self) -> Dict[str, Any]:
        """Flat mapping echoed into every output header (the destination is left out)."""
        values: Dict[str, Any] = {"task": self.task}
        if self.preset is not None:
            values["preset"] = self.preset
        values.update(self.params.model_dump())
        values["grid"] = str(self.grid)
        values["format"] = self.format
        values["workers"] = self.workers
        return values

    @classmethod
    def from_key_values(cls, values: Mapping[str, Any], out: Optional[str] = None) -> "RunConfig":
        """
        Build a configuration from a flat mapping of run keys and parameter fields.

        Args:
            values: Mapping as produced by :meth:`to_key_values` or a config file
            out: Output path

        Raises:
            ConfigError: If the task is missing or a key or value is invalid
        """
        values = dict(values)
        task = values.pop("task", None)
        if task is None:
            raise ConfigError("missing required field task")
        if task not in TASK_NAMES:
            raise ConfigError(f"unknown task {task!r}; expected one of {', '.join(TASK_NAMES)}")
        run = {key: values.pop(key) for key in RUN_KEYS[1:] if key in values}

        params_model = SingleModeParams if task == "single-mode" else SystemParams
        params = params_model.from_key_values(values)

        grid = run.pop("grid", None)
        if grid is None:
            grid = default_grid(task, params.g_a if params.g_a > 0 else 1.0)
        elif isinstance(grid, str):
            grid = GridSpec.parse(grid)
        try:
            return cls(task=task, params=params, grid=grid, out=out, **run)
        except ValidationError as exc:
            raise ConfigError(describe_validation_error(exc)) from exc

    @classmethod
    def from_header(cls, text: str) -> "RunConfig":
        """Recover the configuration from the ``#`` header block of an output file."""
        values = keyvalue.parse(text, comment_prefixed=True)
        kept = {
            key: value
            for key, value in values.items()
            if key not in HEADER_ONLY_KEYS and not key.startswith("summary.")
        }
        return cls.from_key_values(kept)
