"""Serialization of verification reports to JSON and CSV.

Floats are written with 17 significant digits so that every value
round-trips; non-finite values become ``null`` in JSON and ``nan``/``inf``
in CSV.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .inequality import CertificateReport, ConjectureScan, MarginReport
from .replicative import FourierReport, ReplicativeReport
from .special import IdentityResidual

__all__ = ["Table", "dumps", "emit_report", "tabulate"]


@dataclass
class Table:
    """Column names, rows and a summary block ready for output."""

    columns: list[str]
    rows: list[list[Any]]
    verdict: str
    summary: dict[str, Any] = field(default_factory=dict)


def _num(x: Any) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj: Any, indent: int = 0) -> str:
    """JSON text with 17-significant-digit floats."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in obj) + "\n" + end + "]"
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    return _num(obj)


def _csv_cell(x: Any) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _margin_table(r: MarginReport) -> Table:
    rows = [list(t) for t in zip(r.points, r.lhs, r.rhs, r.margins, r.errs)]
    summary = {
        "inequality": r.inequality_id,
        "min_margin": r.min_margin,
        "argmin": r.argmin,
        "eval_err_max": r.eval_err_max,
        "n_points": len(r.points),
        "offending": [list(o) for o in r.offending()],
    }
    return Table(["x", "lhs", "rhs", "margin", "err"], rows, r.label, summary)


def _certificate_table(r: CertificateReport) -> Table:
    rows = [[w.a, w.b, w.z_lower, w.log_upper, w.certified] for w in r.rows + [r.right_edge]]
    summary = {
        "epsilon": r.epsilon,
        "subintervals": r.subinterval_count,
        "leftmost_gap": r.rows[0].gap,
        "min_gap": min(w.gap for w in r.rows + [r.right_edge]),
        "left_edge_bound": r.left_edge_bound.value,
        "left_edge_certified": r.left_edge_certified,
        "analytic_edge_note": r.analytic_edge_note,
        "offending": [list(o) for o in r.offending],
    }
    return Table(["a", "b", "Z_lower", "log_upper", "certified"], rows, "all-certified" if r.verdict else "not-certified", summary)


def _fourier_table(r: FourierReport) -> Table:
    rows = [[n, a.real, a.imag, abs(a)] for n, a in enumerate(r.coefficients)]
    summary = {
        "function": r.function,
        "quadrature_points": r.quadrature_points,
        "quadrature_error_estimate": r.quadrature_error_estimate,
        "a0_discrepancy": float(r.discrepancies[0]),
        "conjugate_symmetry_defect": float(np.max(r.conjugate_symmetry_defect())),
    }
    return Table(["n", "re_a_n", "im_a_n", "abs_a_n"], rows, "", summary)


def _replicative_table(r: ReplicativeReport) -> Table:
    rows = [[p, x, r.residuals[i, j]] for i, p in enumerate(r.multipliers) for j, x in enumerate(r.points)]
    summary = {
        "candidate": r.candidate,
        "weight": r.weight,
        "multipliers": r.multipliers,
        "max_residual": r.max_residual,
        "tolerance": r.tolerance,
        "singular_cells": len(r.failures),
    }
    return Table(["p", "x", "residual"], rows, "pass" if r.verdict else "fail", summary)


def _conjecture_table(r: ConjectureScan) -> Table:
    lo, up = r.lower, r.upper
    rows = [list(t) for t in zip(lo.points, lo.rhs, lo.margins, lo.errs, up.margins, up.errs)]
    summary = {
        "lower_min_margin": lo.min_margin,
        "lower_argmin": lo.argmin,
        "upper_min_margin": up.min_margin,
        "upper_argmin": up.argmin,
        "upper_endpoint_margins": list(r.upper_endpoint_margins),
        "eval_err_max": max(lo.eval_err_max, up.eval_err_max),
        "potential_counterexamples": [list(c) for c in r.counterexamples()],
        "note": "numerical evidence only; the statement is open",
    }
    columns = ["x", "g", "lower_margin", "lower_err", "upper_margin", "upper_err"]
    return Table(columns, rows, r.verdict_label, summary)


def _identity_table(items: list[tuple[str, IdentityResidual, float]]) -> Table:
    rows = [[name, r.s, r.lhs.value, r.rhs.value, r.residual, r.relative, r.err, r.relative <= tol] for name, r, tol in items]
    ok = all(row[-1] for row in rows)
    worst: dict[str, float] = {}
    for name, r, _ in items:
        worst[name] = max(worst.get(name, 0.0), r.relative)
    summary = {"max_relative": worst, "tolerances": {name: tol for name, _, tol in items}}
    columns = ["identity", "s", "lhs", "rhs", "residual", "relative", "err", "within_tol"]
    return Table(columns, rows, "pass" if ok else "fail", summary)


def tabulate(report: Any) -> Table:
    if isinstance(report, Table):
        return report
    if isinstance(report, MarginReport):
        return _margin_table(report)
    if isinstance(report, CertificateReport):
        return _certificate_table(report)
    if isinstance(report, FourierReport):
        return _fourier_table(report)
    if isinstance(report, ReplicativeReport):
        return _replicative_table(report)
    if isinstance(report, ConjectureScan):
        return _conjecture_table(report)
    if isinstance(report, list) and report and isinstance(report[0], tuple) and isinstance(report[0][1], IdentityResidual):
        return _identity_table(report)
    raise TypeError(f"no tabulation for {type(report).__name__}")


def render(report: Any, fmt: str, command: str, config: dict, verdict: str | None = None) -> str:
    table = tabulate(report)
    verdict = verdict if verdict is not None else table.verdict
    if fmt == "json":
        doc = {
            "command": command,
            "config": config,
            "verdict": verdict,
            "summary": table.summary,
            "columns": table.columns,
            "rows": [dict(zip(table.columns, row)) for row in table.rows],
        }
        return dumps(doc) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        for row in table.rows:
            w.writerow([_csv_cell(c) for c in row])
        return buf.getvalue()
    raise ValueError(f"unknown output format {fmt!r}")


def emit_report(report: Any, fmt: str, path: str | None, command: str = "", config: dict | None = None, verdict: str | None = None) -> None:
    """Write a report as JSON or CSV to ``path`` (stdout when None or '-')."""
    text = render(report, fmt, command, config or {}, verdict)
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
