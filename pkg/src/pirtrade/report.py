"""Report rendering: CSV and JSON with exact p/q strings beside decimals."""

import json
import sys
from dataclasses import dataclass

from .rational import format_decimal, format_exact


@dataclass(frozen=True)
class ReportSpec:
    fmt: str = "csv"  # "csv" or "json"
    precision: int = 6
    out: str | None = None  # None -> stdout

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")

    def dec(self, x) -> str:
        return format_decimal(x, self.precision)


def emit(spec: ReportSpec, text: str):
    if spec.out is None:
        sys.stdout.write(text)
    else:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def csv_text(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def json_text(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def rational_fields(spec: ReportSpec, x) -> tuple[str, str]:
    """(decimal, exact) rendering pair used across all reports."""
    return spec.dec(x), format_exact(x)


def rational_json(spec: ReportSpec, x) -> dict:
    return {"exact": format_exact(x), "decimal": spec.dec(x)}
