"""
Command-line entry point: ``rarr-sim <task> [options]`` or ``rarr-sim preset <name>``.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from .. import __version__, keyvalue
from ..errors import ConfigError, NumericalError, ParameterError
from .config import TASK_NAMES, RunConfig
from .output import write_output
from .presets import PRESETS, preset
from .tasks import TASKS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VALIDATION = 3
EXIT_NUMERICAL = 4

# flag destination -> parameter field
PARAM_FLAGS = {
    "g_a": "--g-a",
    "g_b": "--g-b",
    "delta_omega": "--delta-omega",
    "gamma": "--gamma",
    "kappa": "--kappa",
    "omega_a": "--omega-a",
    "omega_b": "--omega-b",
    "delta_omega_a": "--delta-omega-a",
}


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", help="Key-value (or .json) configuration file")
    parent.add_argument("--out", help="Output path (standard output when omitted)")
    parent.add_argument("--format", choices=("tab", "doc"), help="Tabular text or JSON document")
    for dest, flag in PARAM_FLAGS.items():
        parent.add_argument(flag, dest=dest, type=float, help=f"Override {dest}")
    parent.add_argument("--grid", help="Task axis as start:stop:count")
    parent.add_argument("--workers", type=int, help="Worker processes for sweeps")
    parent.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Logging level (default WARNING)",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rarr-sim",
        description="Raman-assisted Rabi resonance in a lossy two-mode cavity",
    )
    parser.add_argument("--version", action="version", version=f"rarr-sim {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parent = _common_options()
    for name in TASK_NAMES:
        subparsers.add_parser(name, parents=[parent], help=TASKS[name].__doc__)
    preset_parser = subparsers.add_parser("preset", parents=[parent], help="Run a figure preset")
    preset_parser.add_argument("name", help=f"One of {', '.join(PRESETS)}")
    return parser


def _read_config_file(path: str) -> Dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    if path.endswith(".json"):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path}: {exc}") from exc
        if not isinstance(values, dict):
            raise ConfigError(f"config {path}: expected a JSON object")
        return values
    return keyvalue.parse(text)


def build_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge preset, config file and command-line overrides, in that order.

    Raises:
        ConfigError: If any source is unreadable or the merged values are invalid
    """
    values: Dict[str, Any] = {}
    if args.command == "preset":
        values.update(preset(args.name).to_key_values())
    if args.config:
        values.update(_read_config_file(args.config))
    if args.command != "preset":
        values["task"] = args.command
    for dest in PARAM_FLAGS:
        override = getattr(args, dest)
        if override is not None:
            values[dest] = override
    for key in ("grid", "format", "workers"):
        override = getattr(args, key)
        if override is not None:
            values[key] = override
    return RunConfig.from_key_values(values, out=args.out)


def run(config: RunConfig, stream=None) -> int:
    """
    Execute one task and write its output.

    Returns:
        0 on success, 2 for configuration errors, 3 for invalid parameters,
        4 for numerical failures
    """
    try:
        task = TASKS[config.task](config)
        output = task.execute()
        write_output(output, config, stream=stream)
    except ConfigError as exc:
        return _fail(EXIT_CONFIG, exc)
    except ParameterError as exc:
        return _fail(EXIT_VALIDATION, exc)
    except NumericalError as exc:
        return _fail(EXIT_NUMERICAL, exc)
    except OSError as exc:
        return _fail(EXIT_CONFIG, f"cannot write {config.out}: {exc.strerror}")
    logger.info("task finished: task=%s rows=%d", config.task, output.rows.shape[0])
    return EXIT_OK


def _fail(status: int, error) -> int:
    print(f"rarr-sim: error: {error}", file=sys.stderr)
    return status


def _join_grid(argv: List[str]) -> List[str]:
    # argparse reads "-2:2:11" as an option, so bind the grid value with "="
    joined: List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--grid":
            value = next(tokens, None)
            joined.append(token if value is None else f"--grid={value}")
        else:
            joined.append(token)
    return joined


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and run; returns the process exit status."""
    argv = _join_grid(sys.argv[1:] if argv is None else list(argv))
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")
    try:
        config = build_config(args)
    except ConfigError as exc:
        return _fail(EXIT_CONFIG, exc)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
