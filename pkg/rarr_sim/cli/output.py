"""
Writers for task output: tabular text and structured JSON documents.
"""

import io
import json
import math
import sys
from typing import Any, Dict, Optional, TextIO

import numpy as np

from .. import __version__, keyvalue
from ..base import TaskOutput
from .config import RunConfig

GENERATOR = f"rarr-sim {__version__}"
NUMBER_FORMAT = "%.12e"


def header_text(output: TaskOutput, config: RunConfig) -> str:
    """``#``-prefixed header: generator, configuration echo, summary and column names."""
    lines = [f"# generator = {GENERATOR}\n"]
    lines.append(keyvalue.dumps(config.to_key_values(), prefix="# "))
    if output.summary:
        summary = {f"summary.{key}": value for key, value in output.summary.items()}
        lines.append(keyvalue.dumps(summary, prefix="# "))
    lines.append(f"# columns = {' '.join(output.columns)}\n")
    return "".join(lines)


def render_table(output: TaskOutput, config: RunConfig) -> str:
    buffer = io.StringIO()
    buffer.write(header_text(output, config))
    np.savetxt(buffer, output.rows, fmt=NUMBER_FORMAT, delimiter=" ")
    return buffer.getvalue()


def _jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    return value


def render_document(output: TaskOutput, config: RunConfig) -> str:
    document: Dict[str, Any] = {
        "header": {"generator": GENERATOR, **_jsonable_mapping(config.to_key_values())},
        "columns": list(output.columns),
        "rows": _jsonable(output.rows.tolist()),
        "summary": _jsonable_mapping(output.summary),
    }
    return json.dumps(document, indent=2) + "\n"


def _jsonable_mapping(mapping: Dict[str, Any]) -> Dict[str, Any]:
    return {key: _jsonable(value) for key, value in mapping.items()}


def write_output(output: TaskOutput, config: RunConfig, stream: Optional[TextIO] = None) -> None:
    """
    Write the output in the configured format to ``config.out`` or ``stream``.

    Standard output is used when neither is given.
    """
    text = render_table(output, config) if config.format == "tab" else render_document(output, config)
    if config.out is not None:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        (stream or sys.stdout).write(text)
