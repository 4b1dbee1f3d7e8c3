"""
Utility functions for writing rows as CSV, TSV or JSON.
"""

import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence

FORMATS = ("csv", "tsv", "json")


def render_rows(
    rows: Iterable[Sequence[Any]], columns: Sequence[str], fmt: str = "tsv", header: bool = True
) -> str:
    """
    Render rows in one of the output formats.

    Args:
        rows (Iterable[Sequence[Any]]): Rows of cells.
        columns (Sequence[str]): Column names.
        fmt (str): "csv", "tsv" or "json".
        header (bool): Write the column names first (CSV and TSV).

    Returns:
        str: The text, ending with a newline unless empty.
    """

    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    rows = [[str(cell) for cell in row] for row in rows]
    if fmt == "json":
        return json.dumps([dict(zip(columns, row)) for row in rows], indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
    if header:
        writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def render_mapping(mapping: Dict[str, Any], fmt: str = "tsv") -> str:
    """Key-value pairs, one per line (CSV/TSV) or one JSON object."""
    if fmt == "json":
        return json.dumps({k: _jsonable(v) for k, v in mapping.items()}, indent=2) + "\n"
    return render_rows(([k, v] for k, v in mapping.items()), ("key", "value"), fmt, header=False)


def _jsonable(value: Any) -> Any:
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def read_records(text: str, delimiter: str = ",") -> List[Dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text), delimiter=delimiter))


def format_digits(digits: Sequence[int]) -> str:
    return ",".join(str(a) for a in digits)
