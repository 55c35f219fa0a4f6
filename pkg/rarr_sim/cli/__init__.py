"""
Command-line front end
"""

from .config import GridSpec, RunConfig, default_grid
from .main import build_config, main, run
from .presets import PRESETS, preset
from .tasks import TASKS

__all__ = [
    "GridSpec",
    "RunConfig",
    "PRESETS",
    "TASKS",
    "default_grid",
    "preset",
    "build_config",
    "run",
    "main",
]
