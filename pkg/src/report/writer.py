"""
Report serialization: JSON envelope, RFC-4180 CSV (pandas) and plain text.

JSON envelope:
    {schema, command, field, inputs, results[], summary{pass, violations[]}}
Keys are sorted and no timestamps are written, so equal inputs give equal bytes.
"""

import json
import logging
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional

import pandas as pd

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "text")


@dataclass
class Report:
    command: str
    field: str
    inputs: dict
    results: list = dc_field(default_factory=list)
    rows: list[dict] = dc_field(default_factory=list)     # flat table for csv/text
    columns: Optional[list[str]] = None
    passed: bool = True
    violations: list = dc_field(default_factory=list)

    def envelope(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "field": self.field,
            "inputs": self.inputs,
            "results": self.results,
            "summary": {"pass": self.passed, "violations": self.violations},
        }


def _cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def to_frame(report: Report) -> pd.DataFrame:
    frame = pd.DataFrame([{k: _cell(v) for k, v in row.items()} for row in report.rows])
    if report.columns is not None:
        frame = frame.reindex(columns=report.columns)
    return frame


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.envelope(), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return to_frame(report).to_csv(index=False, lineterminator="\r\n")
    if fmt == "text":
        frame = to_frame(report)
        body = frame.to_string(index=False) if not frame.empty else "(no rows)"
        status = "PASS" if report.passed else f"FAIL ({len(report.violations)} violations)"
        return f"{report.command} [{report.field}]\n{body}\n{status}\n"
    raise ValueError(f"unknown output format: {fmt}")


def write_report(report: Report, fmt: str = "json", out: Optional[str] = None) -> None:
    text = render(report, fmt)
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="")
        logger.info("Report written to %s", out)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
