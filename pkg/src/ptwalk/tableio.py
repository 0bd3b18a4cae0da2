"""Flat-table serialization for CLI outputs: CSV and JSON, same schema.

CSV files open with '#'-prefixed key=value metadata lines, then one
header row, then data rows.  JSON mirrors that as an object with
"meta", "columns" and "rows".  Cells are limited to numbers and plain
strings so files stay greppable and diffable; values round-trip through
repr so reading back reproduces the written numbers bit for bit.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

__all__ = ["write_table", "read_table"]


def _coerce(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def _plain(value):
    if isinstance(value, (bool,)):
        return value
    if isinstance(value, (int, float, str)) or value is None:
        return value
    # numpy scalars and similar
    if hasattr(value, "item"):
        return value.item()
    return str(value)


def _format_cell(value) -> str:
    value = _plain(value)
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return "nan"
    return str(value)


def write_table(out, meta: dict, columns: list[str], rows, fmt: str = "csv") -> None:
    """Write one table; `out` is a path, a file object, or None for stdout."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    rows = [[_plain(c) for c in row] for row in rows]
    meta = {str(k): _plain(v) for k, v in meta.items()}

    if out is None:
        _dump(sys.stdout, meta, columns, rows, fmt)
        return
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as fh:
            _dump(fh, meta, columns, rows, fmt)
        return
    _dump(out, meta, columns, rows, fmt)


def _dump(fh, meta, columns, rows, fmt):
    if fmt == "json":
        json.dump({"meta": meta, "columns": list(columns), "rows": rows}, fh, indent=1)
        fh.write("\n")
        return
    for key, value in meta.items():
        fh.write(f"# {key}={_format_cell(value)}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_cell(c) for c in row])


def read_table(source) -> tuple[dict, list[str], list[list]]:
    """Parse a table written by write_table; the format is sniffed.

    Returns (meta, columns, rows) with numeric cells restored to int or
    float by trial conversion.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        return dict(doc["meta"]), list(doc["columns"]), [list(r) for r in doc["rows"]]

    meta: dict = {}
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key.strip()] = _coerce(value.strip())
        elif line.strip():
            body.append(line)
    if not body:
        return meta, [], []
    reader = csv.reader(io.StringIO("\n".join(body)))
    parsed = list(reader)
    columns = parsed[0]
    rows = [[_coerce(cell) for cell in row] for row in parsed[1:]]
    return meta, columns, rows
