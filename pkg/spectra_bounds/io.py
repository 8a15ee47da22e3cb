"""
Input Readers

Matrix files:
- plain text: first line n, then n rows of n whitespace-separated reals
- JSON: {"n": int, "rows": [[...], ...]}

Graph files use the edge-list format of graph.parse_edge_list.
"""
import json
from pathlib import Path
from typing import List

from .errors import ParseError
from .graph import Graph, parse_edge_list
from .matrix import NonnegativeMatrix


def _parse_json_matrix(text: str) -> NonnegativeMatrix:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, f"invalid JSON: {e.msg}") from None

    if not isinstance(payload, dict) or "n" not in payload or "rows" not in payload:
        raise ParseError(1, 'JSON matrix must be an object with "n" and "rows"')
    n, rows = payload["n"], payload["rows"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(1, f"n must be a positive integer, got {n!r}")
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(1, f"expected {n} rows")

    values = []
    for k, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(1, f"row {k} must have {n} entries")
        try:
            values.append([float(x) for x in row])
        except (TypeError, ValueError):
            raise ParseError(1, f"row {k} has a non-numeric entry") from None
    return NonnegativeMatrix.from_rows(values)


def _parse_text_matrix(text: str) -> NonnegativeMatrix:
    lines = [(k, line.strip()) for k, line in enumerate(text.splitlines(), start=1)]
    lines = [(k, line) for k, line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError(1, "empty matrix file")

    lineno, header = lines[0]
    if not header.isdigit() or int(header) < 1:
        raise ParseError(lineno, f"expected dimension n, got {header!r}")
    n = int(header)
    if len(lines) - 1 != n:
        raise ParseError(lineno, f"expected {n} rows, found {len(lines) - 1}")

    rows: List[List[float]] = []
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(fields)}")
        try:
            rows.append([float(x) for x in fields])
        except ValueError:
            raise ParseError(lineno, f"non-numeric entry in {line!r}") from None
    return NonnegativeMatrix.from_rows(rows)


def parse_matrix(text: str) -> NonnegativeMatrix:
    """Plain-text or JSON matrix, chosen by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return _parse_json_matrix(text)
    return _parse_text_matrix(text)


def _read_text(path: Path) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(data[:e.start].count(b"\n") + 1, "input is not valid UTF-8") from None


def read_matrix(path: Path) -> NonnegativeMatrix:
    return parse_matrix(_read_text(path))


def read_graph(path: Path) -> Graph:
    return parse_edge_list(_read_text(path))
