"""Report container and its JSON / CSV / markdown renderings.

A report is a command echo plus a ``summary`` mapping and a table of
``rows`` (flat dicts of scalars).  All three renderings carry the same
values; CSV writes the rows table, a blank line, then the summary as
key,value pairs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    command: str
    engine: dict[str, str]
    flags: dict[str, Any]
    summary: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "engine": self.engine,
            "flags": self.flags,
            "summary": self.summary,
            "rows": self.rows,
        }


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        for key in r:
            if key not in cols:
                cols.append(key)
    return cols


def render_json(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = _columns(report.rows)
    if cols:
        writer.writerow(cols)
        for r in report.rows:
            writer.writerow([_cell(r.get(c)) for c in cols])
    buf.write("\n")
    writer.writerow(["key", "value"])
    for key, value in report.summary.items():
        writer.writerow([key, _cell(value)])
    return buf.getvalue()


def render_md(report: Report) -> str:
    out = [f"# vpowers {report.command}", ""]
    out.append(f"engine {report.engine['name']} {report.engine['version']}")
    flags = " ".join(f"{k}={_cell(v)}" for k, v in report.flags.items())
    out += [f"flags: {flags}", ""]
    for key, value in report.summary.items():
        out.append(f"- **{key}**: {_cell(value)}")
    cols = _columns(report.rows)
    if cols:
        out += ["", "| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in report.rows:
            out.append("| " + " | ".join(_cell(r.get(c)).replace("|", "\\|") for c in cols) + " |")
    return "\n".join(out) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "md": render_md}


def read_csv(text: str) -> tuple[list[dict[str, str]], dict[str, str]]:
    """Parse :func:`render_csv` output back into (rows, summary) as strings."""
    records = list(csv.reader(io.StringIO(text)))
    split = records.index([])
    table, tail = records[:split], records[split + 1 :]
    rows = [dict(zip(table[0], r)) for r in table[1:]] if table else []
    summary = {k: v for k, v in tail[1:]}
    return rows, summary
