"""Deterministic JSON, CSV and LaTeX renderings."""

import csv
import io
import json

from .combinatorics import descending_order_key, involution_vee, latex_multipartition, serialize
from .config import SCHEMA_VERSION


def dumps_json(payload):
    payload = dict(payload)
    payload.setdefault("schema_version", SCHEMA_VERSION)
    ordered = {"schema_version": payload.pop("schema_version")}
    ordered.update(payload)
    return json.dumps(ordered, indent=2, ensure_ascii=False) + "\n"


def matrix_json(index, entry):
    """``{row: {col: poly-json}}`` over nonzero entries, in index order."""
    out = {}
    for row in index:
        cols = {}
        for col in index:
            p = entry(row, col)
            if p:
                cols[serialize(col)] = p.to_json()
        out[serialize(row)] = cols
    return out


def matrix_csv(index, entries_by_name):
    """One line per nonzero entry: ``matrix,row,col,entry``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["matrix", "row", "col", "entry"])
    for name, entry in entries_by_name:
        for row in index:
            for col in index:
                p = entry(row, col)
                if p:
                    writer.writerow([name, serialize(row), serialize(col), str(p).replace(" ", "")])
    return buf.getvalue()


def table_order(index, sign):
    """Row / column order of rendered tables: descending triangle order (of ``lam^vee``
    for K+)."""
    if sign == "plus":
        return sorted(index, key=lambda lam: descending_order_key(involution_vee(lam)))
    return sorted(index, key=descending_order_key)


def latex_table(index, entry, sign):
    order = table_order(index, sign)
    corner = "$K^-$" if sign == "minus" else "$K^+$"
    lines = [r"\begin{tabular}{c|" + "c" * len(order) + "}"]
    lines.append("&".join([corner] + [f"${latex_multipartition(c)}$" for c in order])
                 + r"\\\hline")
    body = []
    for row in order:
        cells = [f"${latex_multipartition(row)}$"]
        for col in order:
            p = entry(row, col)
            cells.append(f"${p.latex()}$" if p else "")
        body.append(" & ".join(cells))
    lines.append(" \\\\\n".join(body))
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def table_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
