"""
Flat key-value documents.

One ``key = value`` pair per line; ``#`` starts a comment. The same format is
used for configuration files and for the reproducibility header of every
output file (with each line prefixed by ``# ``).
"""

import re
from typing import Any, Dict, Iterable, Mapping, Tuple

from .errors import ConfigError

KEY_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


def format_value(value: Any) -> str:
    """Render a value so that :func:`parse` followed by float() is lossless."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def dumps(mapping: Mapping[str, Any], prefix: str = "") -> str:
    """
    Serialize a mapping into a key-value document.

    Args:
        mapping: Ordered mapping of keys to values
        prefix: String put in front of every line (``"# "`` for headers)

    Returns:
        The document, newline-terminated
    """
    lines = []
    for key, value in mapping.items():
        if not KEY_RE.match(key):
            raise ConfigError(f"Invalid key {key!r}")
        lines.append(f"{prefix}{key} = {format_value(value)}")
    return "\n".join(lines) + "\n"


def iter_pairs(text: str, comment_prefixed: bool = False) -> Iterable[Tuple[int, str, str]]:
    """Yield ``(line_number, key, value)`` for every pair in ``text``."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if comment_prefixed:
            if not line.startswith("#"):
                continue
            line = line[1:].strip()
        elif line.startswith("#"):
            continue
        if not line:
            continue
        if "=" not in line:
            if comment_prefixed:
                continue
            raise ConfigError(f"Line {number}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not KEY_RE.match(key):
            raise ConfigError(f"Line {number}: invalid key {key!r}")
        yield number, key, value


def parse(text: str, comment_prefixed: bool = False) -> Dict[str, str]:
    """
    Parse a key-value document into a dict of raw string values.

    Args:
        text: Document text
        comment_prefixed: Read pairs from ``#``-prefixed header lines instead

    Returns:
        Mapping of keys to unparsed values

    Raises:
        ConfigError: On malformed lines or duplicate keys
    """
    values: Dict[str, str] = {}
    for number, key, value in iter_pairs(text, comment_prefixed):
        if key in values:
            raise ConfigError(f"Line {number}: duplicate key {key!r}")
        values[key] = value
    return values
