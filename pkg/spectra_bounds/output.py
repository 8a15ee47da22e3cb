"""
Output Rendering

- table: aligned columns, 6 significant digits (for humans)
- csv:   header kind,alpha,i,side,bound,rho,gap,equality,branch; 12 significant digits
- json:  {"rows": [...]} with ResultRow dumps; 12 significant digits

Everything is assembled into one string and written once by the CLI.
"""
import csv
import io
import json
from typing import List, Sequence

from .models import BoundReport, ResultRow, SweepRow, VerifyReport, round_sig

CSV_HEADER = ["kind", "alpha", "i", "side", "bound", "rho", "gap", "equality", "branch"]
SWEEP_HEADER = ["kind", "alpha", "best_i", "upper_gap", "lower_gap", "rho"]


def _number(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return f"{value:.{digits}g}"


def result_rows(reports: Sequence[BoundReport], digits: int = 12) -> List[ResultRow]:
    return [ResultRow.from_report(report, digits) for report in reports]


def _csv(header: List[str], records: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()


def _table(header: List[str], records: List[List[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in records)) if records else len(h) for k, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for record in records:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(record, widths)).rstrip())
    return "\n".join(lines) + "\n"


# =============================================================================
# bound
# =============================================================================

def _bound_records(rows: List[ResultRow], digits: int) -> List[List[str]]:
    return [
        [
            row.kind,
            _number(row.alpha, digits),
            str(row.i),
            row.side,
            _number(row.bound, digits),
            _number(row.rho, digits),
            _number(row.gap, digits),
            _number(row.equality, digits),
            row.branch,
        ]
        for row in rows
    ]


def render_rows(reports: Sequence[BoundReport], output_format: str, machine_digits: int = 12,
                table_digits: int = 6) -> str:
    rows = result_rows(reports, machine_digits)
    if output_format == "json":
        return json.dumps({"rows": [row.model_dump() for row in rows]}, indent=2) + "\n"
    if output_format == "csv":
        return _csv(CSV_HEADER, _bound_records(rows, machine_digits))
    return _table(CSV_HEADER, _bound_records(rows, table_digits))


# =============================================================================
# sweep
# =============================================================================

def render_sweep(rows: Sequence[SweepRow], output_format: str, machine_digits: int = 12,
                 table_digits: int = 6) -> str:
    digits = table_digits if output_format == "table" else machine_digits
    if output_format == "json":
        payload = [
            {k: round_sig(v, digits) if isinstance(v, float) else v for k, v in row.model_dump().items()}
            for row in rows
        ]
        return json.dumps({"rows": payload}, indent=2) + "\n"
    records = [
        [row.kind, _number(row.alpha, digits), str(row.best_i), _number(row.upper_gap, digits),
         _number(row.lower_gap, digits), _number(row.rho, digits)]
        for row in rows
    ]
    if output_format == "csv":
        return _csv(SWEEP_HEADER, records)
    return _table(SWEEP_HEADER, records)


# =============================================================================
# verify
# =============================================================================

def render_verify(report: VerifyReport, output_format: str, machine_digits: int = 12) -> str:
    if output_format == "json":
        return json.dumps(report.model_dump(), indent=2) + "\n"

    status = "PASS" if report.passed else "FAIL"
    lines = [
        f"{status}: {report.checked} bounds on {report.trials} random {report.input_kind} "
        f"instance(s) from seed {report.seed}, {len(report.violations)} violation(s)"
    ]
    for v in report.violations:
        lines.append(
            f"  seed={v.seed} {v.instance} kind={v.kind} alpha={_number(v.alpha, machine_digits)} "
            f"i={v.i} side={v.side} bound={_number(v.bound, machine_digits)} "
            f"rho={_number(v.rho, machine_digits)}"
        )
    return "\n".join(lines) + "\n"
