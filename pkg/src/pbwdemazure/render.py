"""
# pbwdemazure.render

Output formats for command results.

- `json` – the payload with sorted keys, so reruns are byte-identical.
- `csv` – list-of-rows payloads (sweeps), columns in declared order.
- `text` – the message plus a `rich` table built from the payload.
"""
import csv
import io
import json
import sys
from typing import Any, Sequence, TextIO

from rich.console import Console
from rich.table import Table

from .cmd.types import CommandResult
from .errors import InputError

FORMATS = ("json", "csv", "text")



def to_json_text(data: Any) -> str:
    """
    Serializes `data` with sorted keys and two-space indentation, so equal payloads give equal bytes.
    """
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def to_csv_text(rows: Sequence[dict[str, Any]], fields: Sequence[str] | None = None) -> str:
    """
    Renders rows as CSV; `fields` fixes the column order (defaults to the first row's keys).

    ## Raises
    - *InputError* – If the payload is not a list of flat rows.
    """
    if not isinstance(rows, list) or not all(isinstance(row, dict) for row in rows):
        raise InputError("CSV output needs a list of rows; use --format json or text")
    if fields is None:
        fields = list(rows[0]) if rows else []
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({name: _cell(row.get(name)) for name in fields})
    return buffer.getvalue()


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def to_table(data: Any, title: str | None = None) -> Table:
    """
    Builds a `rich` table: one column per key for a list of rows, key/value pairs otherwise.
    """
    table = Table(title=title, show_lines=False)
    if isinstance(data, list) and data and all(isinstance(row, dict) for row in data):
        columns = list(data[0])
        for name in columns:
            table.add_column(name, style="cyan" if name == columns[0] else None)
        for row in data:
            table.add_row(*(_cell(row.get(name)) for name in columns))
    elif isinstance(data, dict):
        table.add_column("key", style="cyan")
        table.add_column("value")
        for key, value in sorted(data.items()):
            table.add_row(str(key), _cell(value))
    else:
        table.add_column("value")
        items = data if isinstance(data, list) else [data]
        for value in items:
            table.add_row(_cell(value))
    return table


def emit(
    result: CommandResult,
    fmt: str,
    fields: Sequence[str] | None = None,
    stream: TextIO | None = None,
    console: Console | None = None,
) -> None:
    """
    Writes a command result to `stream` (stdout by default) in the requested format.

    Failed results print their message to stderr; the payload, when present, is still emitted.
    """
    stream = stream or sys.stdout
    if not result.ok and result.message:
        Console(stderr=True).print(result.message)
    if fmt == "text":
        console = console or Console(file=stream)
        if result.ok and result.message:
            console.print(result.message)
        if result.data is not None:
            console.print(to_table(result.data))
        return
    if result.data is None:
        return
    if fmt == "csv":
        stream.write(to_csv_text(result.data, fields))
    else:
        stream.write(to_json_text(result.data))
