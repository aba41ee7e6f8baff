"""Deterministic result emission: CSV records plus a JSON aggregate sidecar.

Identical sweep results must serialize to identical bytes, so floats are
written with shortest round-trip repr, None becomes the empty string,
and the JSON writer sorts keys and never embeds timestamps.
"""

from __future__ import annotations

import json
from pathlib import Path


def format_cell(value) -> str:
    """One CSV cell: shortest-round-trip floats, empty string for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path, columns, records) -> None:
    """Write header + rows; every row must match the column count."""
    lines = [",".join(columns)]
    for record in records:
        if len(record) != len(columns):
            raise ValueError(
                f"record width {len(record)} != {len(columns)} columns"
            )
        lines.append(",".join(format_cell(cell) for cell in record))
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def _plain(value):
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def write_json_sidecar(csv_path, payload) -> Path:
    """Write aggregates next to the CSV as `<name>.json`; returns the path."""
    side = Path(csv_path).with_suffix(".json")
    side.write_text(json.dumps(_plain(payload), indent=2, sort_keys=True) + "\n")
    return side
