"""Check records and report documents (JSON / CSV / text renderings).

A report is deterministic apart from its timestamp: records are ordered
by check name (then insertion order), floats are serialized with repr
precision, and the summary counts are derived from the records.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone

__all__ = [
    "CheckRecord",
    "ReportDocument",
    "build_report",
    "render_report",
    "to_json",
    "to_csv",
    "to_text",
]

TOOL_NAME = "meanlab"
TOOL_VERSION = "0.1.0"

FORMATS = ("json", "csv", "text")

CSV_HEADER = ("check", "name", "x", "y", "z", "margin", "pass")


@dataclass(frozen=True)
class CheckRecord:
    """One verification outcome.

    `margin` is the signed slack of whatever inequality or tolerance the
    check enforces (non-negative on pass); point-free checks leave the
    coordinate fields None.
    """

    check: str
    name: str
    passed: bool
    x: float | None = None
    y: float | None = None
    z: float | None = None
    margin: float | None = None
    detail: str = ""


@dataclass(frozen=True)
class ReportDocument:
    tool: str
    version: str
    timestamp: str
    records: tuple[CheckRecord, ...]
    summary: dict[str, int]


def build_report(records: list[CheckRecord]) -> ReportDocument:
    """Assemble a document: records sorted by check name, tallied summary."""
    ordered = tuple(sorted(records, key=lambda r: r.check))  # stable within a check
    n_pass = sum(1 for r in ordered if r.passed)
    return ReportDocument(
        tool=TOOL_NAME,
        version=TOOL_VERSION,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        records=ordered,
        summary={"pass": n_pass, "fail": len(ordered) - n_pass, "total": len(ordered)},
    )


def to_json(doc: ReportDocument) -> str:
    payload = {
        "tool": doc.tool,
        "version": doc.version,
        "timestamp": doc.timestamp,
        "records": [
            {
                "check": r.check,
                "name": r.name,
                "x": r.x,
                "y": r.y,
                "z": r.z,
                "margin": r.margin,
                "pass": r.passed,
                "detail": r.detail,
            }
            for r in doc.records
        ],
        "summary": doc.summary,
    }
    return json.dumps(payload, indent=2) + "\n"


def _cell(value: float | None) -> str:
    return "" if value is None else repr(value)


def to_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in doc.records:
        writer.writerow([r.check, r.name, _cell(r.x), _cell(r.y), _cell(r.z),
                         _cell(r.margin), "true" if r.passed else "false"])
    return buf.getvalue()


def to_text(doc: ReportDocument) -> str:
    lines = [f"{doc.tool} {doc.version} @ {doc.timestamp}"]
    for r in doc.records:
        status = "PASS" if r.passed else "FAIL"
        extra = f" margin={r.margin:.3e}" if r.margin is not None else ""
        detail = f"  ({r.detail})" if r.detail else ""
        lines.append(f"[{status}] {r.check} :: {r.name}{extra}{detail}")
    s = doc.summary
    lines.append(f"summary: {s['pass']} passed, {s['fail']} failed, {s['total']} total")
    return "\n".join(lines) + "\n"


def render_report(doc: ReportDocument, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    if fmt == "text":
        return to_text(doc)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
