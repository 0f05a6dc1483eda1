"""CSV / JSON rendering of result rows.

A row is a plain ``dict``.  Exact rationals render as ``num/den`` in CSV and
as ``{"num": ..., "den": ...}`` in JSON, so both formats carry the same
digit strings.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .gibbs import DecimalValue

__all__ = ["render_csv", "render_json", "render"]

Row = Mapping[str, Any]


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, tuple):
        return ":".join(map(str, value))
    return str(value)


def _json_cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, DecimalValue):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def render_csv(rows: Sequence[Row], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def render_json(rows: Sequence[Row], columns: Sequence[str]) -> str:
    payload = {"rows": [{c: _json_cell(row.get(c)) for c in columns} for row in rows]}
    return json.dumps(payload, indent=2) + "\n"


def render(rows: Sequence[Row], columns: Sequence[str], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(rows, columns)
    if fmt == "json":
        return render_json(rows, columns)
    raise ValueError(f"unknown tabular format {fmt!r}")
