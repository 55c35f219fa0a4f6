"""
Base task class for the rarr-sim front end
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np


@dataclass(frozen=True)
class TaskOutput:
    """Tabular result of one task plus its flat summary."""

    columns: Tuple[str, ...]
    rows: np.ndarray
    summary: Dict[str, Any] = field(default_factory=dict)


class BaseTask(ABC):
    """
    Base class for all front-end tasks.

    A task turns one run configuration into a native numeric result through
    the library modules and then translates that result into the tabular
    form every writer understands.
    """

    name: str = ""

    def __init__(self, config):
        """
        Initialize the task with its run configuration.

        Args:
            config: RunConfig describing parameters, grid and output
        """
        self.config = config
        self._validate_config()

    @abstractmethod
    def _validate_config(self) -> None:
        """
        Validate the run configuration for this task.

        Raises:
            ConfigError: If the configuration does not fit the task
            ParameterError: If the parameters are physically invalid
        """
        pass

    @abstractmethod
    def compute(self) -> Any:
        """
        Run the computation.

        Returns:
            Native result of the underlying library call
        """
        pass

    @abstractmethod
    def to_table(self, result: Any) -> TaskOutput:
        """
        Translate a native result into columns, rows and summary.

        Args:
            result: Value returned by :meth:`compute`

        Returns:
            Tabular task output
        """
        pass

    def execute(self) -> TaskOutput:
        """Compute and translate in one call."""
        return self.to_table(self.compute())
