"""Render K-Exit tables as text, markdown, csv or json.

Output is byte-deterministic for identical inputs. Column order follows the
published table layout: p, theta, theta_bar, witness set, degree, witness
size, result. Tables built with method "L" show the L witness columns in
place of H; json always carries every computed field.
"""

from __future__ import annotations

import csv
import io
import json

from .core import METHOD_L, METHODS, KExitRow, KExitTable
from .errors import ParseError

FORMATS = ("text", "md", "csv", "json")

_EMPTY_SET = "∅"  # the only non-ASCII glyph ever emitted (text/md only)


def render(table: KExitTable, fmt: str = "text") -> str:
    if fmt == "text":
        return _render_text(table)
    if fmt == "md":
        return _render_md(table)
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "json":
        return _render_json(table)
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def _witness(table: KExitTable) -> tuple[str, bool]:
    """Witness column label and whether it is the L variant."""
    if table.method == METHOD_L:
        return "L(p,G)", True
    return "H(p,G)", False


def _witness_set(row: KExitRow, use_l: bool) -> tuple[int, ...]:
    return row.l_set if use_l else row.page


def _set_text(values: tuple[int, ...], empty: str) -> str:
    return ",".join(str(v) for v in values) if values else empty


def _result_text(row: KExitRow, method: str) -> str:
    return f"{row.prime} not in pi(K)" if row.exits(method) else "-"


def _verdict_line(table: KExitTable) -> str:
    if table.excluded:
        return "not in pi(K): " + ", ".join(str(p) for p in table.excluded)
    return "not in pi(K): (none)"


def _grid(table: KExitTable, empty: str) -> tuple[list[str], list[list[str]]]:
    label, use_l = _witness(table)
    header = ["p", "theta(p)", "theta_bar(p)", label, "d_G(p)", f"|{label}|", "result"]
    rows = []
    for row in table.rows:
        witness = _witness_set(row, use_l)
        rows.append(
            [
                str(row.prime),
                _set_text(row.theta, empty),
                _set_text(row.theta_bar, empty),
                _set_text(witness, empty),
                str(row.degree),
                str(len(witness)),
                _result_text(row, table.method),
            ]
        )
    return header, rows


def _render_text(table: KExitTable) -> str:
    header, rows = _grid(table, _EMPTY_SET)
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
             for line in [header] + rows]
    lines.append(_verdict_line(table))
    return "\n".join(lines) + "\n"


def _render_md(table: KExitTable) -> str:
    header, rows = _grid(table, _EMPTY_SET)
    header = [cell.replace("|", "\\|") for cell in header]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    lines.append("")
    lines.append(_verdict_line(table))
    return "\n".join(lines) + "\n"


def _render_csv(table: KExitTable) -> str:
    label, use_l = _witness(table)
    short = "L" if use_l else "H"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["p", "theta", "theta_bar", short, "d_G", f"|{short}|", "result"])
    for row in table.rows:
        witness = _witness_set(row, use_l)
        writer.writerow(
            [
                row.prime,
                _set_text(row.theta, ""),
                _set_text(row.theta_bar, ""),
                _set_text(witness, ""),
                row.degree,
                len(witness),
                "excluded" if row.exits(table.method) else "",
            ]
        )
    return buffer.getvalue()


def table_to_dict(table: KExitTable) -> dict:
    return {
        "method": table.method,
        "rows": [
            {
                "prime": row.prime,
                "power": row.power,
                "theta": list(row.theta),
                "theta_bar": list(row.theta_bar),
                "page": list(row.page),
                "l_set": list(row.l_set),
                "degree": row.degree,
                "page_size": len(row.page),
                "l_size": len(row.l_set),
                "exits_by_h": row.exits_by_h,
                "exits_by_l": row.exits_by_l,
                "excluded": row.exits(table.method),
            }
            for row in table.rows
        ],
        "excluded": list(table.excluded),
    }


def _render_json(table: KExitTable) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def table_from_json(text: str) -> KExitTable:
    """Rebuild a KExitTable from render(..., "json") output."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        method = data["method"]
        if method not in METHODS:
            raise ParseError(f"unknown method {method!r}")
        rows = tuple(
            KExitRow(
                prime=entry["prime"],
                power=entry["power"],
                theta=tuple(entry["theta"]),
                theta_bar=tuple(entry["theta_bar"]),
                page=tuple(entry["page"]),
                l_set=tuple(entry["l_set"]),
                degree=entry["degree"],
                exits_by_h=entry["exits_by_h"],
                exits_by_l=entry["exits_by_l"],
            )
            for entry in data["rows"]
        )
        excluded = tuple(data["excluded"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed table JSON: {exc}") from exc
    return KExitTable(rows=rows, excluded=excluded, method=method)
