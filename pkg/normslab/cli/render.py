"""Canonical and human renderings of CLI output documents.

The canonical form is UTF-8 JSON with sorted keys and a trailing newline, so
identical invocations produce identical bytes. Tables are for reading only.
"""

import json
from typing import Any, Dict, Iterable, List

from pydantic import BaseModel

from normslab.models.reports import OortReport


def canonical_json(document: BaseModel) -> str:
    data = document.model_dump(mode="json", by_alias=True)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return str(value)


def format_table(headers: List[str], rows: Iterable[Iterable[Any]]) -> str:
    body = [[_cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in body:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    rule = "  ".join("-" * w for w in widths)
    out = [line, rule]
    out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in body]
    return "\n".join(out)


def _summary(data: Dict[str, Any]) -> str:
    scalars = [
        (key, value)
        for key, value in sorted(data.items())
        if not isinstance(value, dict)
        and not (
            isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value)
        )
    ]
    return format_table(["field", "value"], scalars)


def render_oort(report: OortReport) -> str:
    header = (
        f"p={report.p} c={report.c} W={report.W} precision={report.precision}\n"
        f"d_eta={report.d_eta} branch_count={report.branch_count} m_0={report.m_0}"
        + (f" level_cap={report.level_cap}" if report.level_cap is not None else "")
    )
    rows = [
        (
            r.m,
            r.unit_index,
            r.conductor,
            r.d_m,
            r.eisenstein_ok,
            r.pthpower_ok,
            r.pthpower_index,
            r.cross_check.agrees if r.cross_check else None,
            r.error,
        )
        for r in report.levels
    ]
    table = format_table(
        ["m", "nu(u-1)", "conductor", "d_m", "eisenstein", "pth-power", "index", "cross", "error"],
        rows,
    )
    verdict = f"verdict: {report.verdict}"
    if report.first_failure:
        verdict += f" ({report.first_failure})"
    return "\n".join([header, table, f"conductor stable: {_cell(report.conductor_stable)}", verdict])


def render_table(document: BaseModel) -> str:
    """Human-readable view of any output document."""
    if isinstance(document, OortReport):
        return render_oort(document) + "\n"
    data = document.model_dump(mode="json", by_alias=True)
    parts = [_summary(data)]
    for key, value in sorted(data.items()):
        if isinstance(value, list) and value and isinstance(value[0], dict):
            headers = sorted(value[0])
            rows = [[row.get(h) for h in headers] for row in value]
            parts.append(f"{key}:\n" + format_table(headers, rows))
        elif isinstance(value, dict) and value:
            parts.append(f"{key}:\n" + _summary(value))
    return "\n\n".join(parts) + "\n"
