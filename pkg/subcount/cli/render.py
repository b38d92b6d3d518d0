"""Output formatting for the CLI: text, JSON, CSV and JSON lines."""
import csv
import io
from typing import Iterable, List, Sequence

from pydantic import BaseModel

from subcount.schemas.output_dto import OutputRecord, VerificationReport


def to_json(model: BaseModel) -> str:
    return model.model_dump_json()


def output_record_text(record: OutputRecord) -> str:
    methods = ",".join(m.value for m in record.methods_run)
    return "\n".join([
        f"instance: r={record.r} d={record.d} r'={record.r_prime} g={record.g}",
        f"d': {record.d_prime} ({record.parity.value})",
        f"case: {record.case.value}",
        f"count: {record.count}",
        f"methods: {methods}",
        f"agreement: {str(record.agreement).lower()}",
    ])


def _row_cells(row: BaseModel) -> List[str]:
    return [str(value) for value in row.model_dump().values()]


def table(rows: Iterable[BaseModel], fmt: str) -> str:
    """Render table rows as csv (with header), jsonl, json (one array) or aligned text."""
    rows = list(rows)
    if fmt == "jsonl":
        return "\n".join(row.model_dump_json() for row in rows)
    if fmt == "json":
        return "[" + ",".join(row.model_dump_json() for row in rows) + "]"

    header: Sequence[str] = list(type(rows[0]).model_fields) if rows else []
    body = [_row_cells(row) for row in rows]
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buffer.getvalue().rstrip("\n")

    widths = [max(len(cell) for cell in column) for column in zip(header, *body)]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths))
        for line in [list(header)] + body
    ]
    return "\n".join(lines)


def verification_report_text(report: VerificationReport) -> str:
    lines = [f"verify g=1..{report.max_g}"]
    if report.base_case is not None:
        lines.append(f"base case: a_1={report.base_case[0]} b_1={report.base_case[1]}")
    for tally in report.tallies:
        total = tally.passed + tally.failed
        if total:
            lines.append(f"{tally.identity}: {tally.passed}/{total} passed")
    for mismatch in report.mismatches:
        lines.append(f"MISMATCH g={mismatch.g} {mismatch.identity} {mismatch.detail}".rstrip())
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines)
