"""Text, CSV and JSON emitters for count tables and asymptotic reports.

Exact counts are always written as decimal strings; floats appear only for
the fitted constant and the sub-exponential table, in 4-significant-figure
scientific notation.
"""

import csv
import io
import json
from typing import Dict, List, Sequence

from .counting.asymptotics import AsymptoticExpansion, SubexpRow, expansion_report
from .counting.methods import CountTable

FORMATS = ("text", "csv", "json")


def format_sci(value: float) -> str:
    return f"{value:.3e}"


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"Unknown output format '{fmt}' (choose from {', '.join(FORMATS)})")


def _csv(header: Sequence[str], rows: List[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _text(header: Sequence[str], rows: List[Sequence[object]]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit_count_table(table: CountTable, fmt: str = "text") -> str:
    """One row per ``n``, one column per label; missing cells are blank."""
    _check_format(fmt)
    labels = table.labels()
    rows = [
        [n] + [str(table.entries[(label, n)]) if (label, n) in table.entries else ""
               for label in labels]
        for n in table.ns()
    ]
    if fmt == "json":
        payload: Dict[str, object] = {
            "columns": labels,
            "rows": [{"n": row[0], **dict(zip(labels, row[1:]))} for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv(["n"] + labels, rows)
    return _text(["n"] + labels, rows)


def emit_subexp(rows: Sequence[SubexpRow], fmt: str = "text") -> str:
    _check_format(fmt)
    header = ["n", "exact_ratio", "g", "flagged"]
    body = [
        [row.n, format_sci(row.exact_ratio), format_sci(row.g), "yes" if row.flagged else "no"]
        for row in rows
    ]
    if fmt == "json":
        return json.dumps([
            {"n": row.n, "exact_ratio": format_sci(row.exact_ratio),
             "g": format_sci(row.g), "flagged": row.flagged}
            for row in rows
        ], indent=2) + "\n"
    if fmt == "csv":
        return _csv(header, body)
    return _text(header, body)


def emit_expansion(
    exp: AsymptoticExpansion,
    rows: Sequence[SubexpRow] = None,
    fmt: str = "text",
) -> str:
    _check_format(fmt)
    if fmt == "json":
        return json.dumps(expansion_report(exp, rows), indent=2) + "\n"
    header = ["quantity", "value"]
    body: List[Sequence[object]] = [["lambda", exp.lam], ["theta", exp.theta]]
    body += [[f"c{j}", c] for j, c in enumerate(exp.corrections, start=1)]
    if exp.K is not None:
        body.append(["K", f"{exp.K:.6f}"])
    out = _csv(header, body) if fmt == "csv" else _text(header, body)
    if rows:
        out += ("" if fmt == "csv" else "\n") + emit_subexp(rows, fmt)
    return out
