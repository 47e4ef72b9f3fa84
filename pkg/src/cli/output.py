"""CSV and JSON rendering of result tables.

Floats are written with 17 significant digits in both formats so that parsing the
output gives back the exact doubles. A missing value is an empty CSV cell or JSON null.
"""

import csv
import io
import json
from collections.abc import Mapping, Sequence
from typing import Literal

OutputFormat = Literal["csv", "json"]
Cell = int | float | str | None


def format_float(value: float) -> str:
    return "%.17g" % value


def _csv_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_value(value: Cell) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    return json.dumps(value)


def render_csv(rows: Sequence[Mapping[str, Cell]], columns: Sequence[str]) -> str:
    """Header line plus one line per row, ``\\n`` terminated."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def render_json(rows: Sequence[Mapping[str, Cell]], columns: Sequence[str]) -> str:
    """An array of objects with the given keys in column order."""
    if not rows:
        return "[]\n"
    lines = []
    for row in rows:
        fields = ", ".join(
            f"{json.dumps(column)}: {_json_value(row.get(column))}" for column in columns
        )
        lines.append("  {" + fields + "}")
    return "[\n" + ",\n".join(lines) + "\n]\n"


def render(
    rows: Sequence[Mapping[str, Cell]], columns: Sequence[str], output_format: OutputFormat
) -> str:
    if output_format == "json":
        return render_json(rows, columns)
    return render_csv(rows, columns)
