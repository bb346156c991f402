"""Comparison tables, figure data and polynomial listings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .errors import SingularityError
from .numeric import DEFAULT_DIGITS, as_rational, to_decimal
from .polynomials import generate_adomian, render, to_json_obj
from .reference import ComparisonRow, blow_up_time, closed_form, eval_closed_form
from .solver import ODEProblem, evaluate, solve

__all__ = [
    "ComparisonTable",
    "DEFAULT_T_GRID",
    "build_comparison_table",
    "export_table",
    "figure_data",
    "format_number",
    "list_polynomials",
    "parse_table_json",
]

DEFAULT_ORDER = 11
DEFAULT_T_GRID = (
    "-0.14", "-0.13", "-0.12", "-0.11", "-0.10", "0.00",
    "0.10", "0.11", "0.12", "0.13", "0.14",
)
COLUMNS = ("t", "exact", "adm", "abs_error")


@dataclass(frozen=True)
class ComparisonTable:
    label: str
    order: int
    rows: tuple
    digits: int


def format_number(x: Decimal, digits: int) -> str:
    """Positional notation with exactly ``digits`` significant figures; zero is "0"."""
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        r = +x
        # rounding may carry into a new leading digit, so quantize after it
        q = r.quantize(Decimal(1).scaleb(r.adjusted() - digits + 1))
        return format(q, "f")


def _check_below_blow_up(t: Fraction, t_star: Decimal | None) -> None:
    if t_star is not None and t >= Fraction(t_star):
        shown = to_decimal(t, 20).normalize()
        raise SingularityError(shown, t_star, f"t={shown} is at or past the blow-up time t*={t_star}")


def build_comparison_table(
    problem: ODEProblem,
    N: int = DEFAULT_ORDER,
    t_values: Sequence = DEFAULT_T_GRID,
    digits: int = DEFAULT_DIGITS,
) -> ComparisonTable:
    """One row per t: closed form, order-N partial sum and their distance."""
    cf = closed_form(problem)
    t_star = blow_up_time(cf, digits)
    ts = sorted(as_rational(t) for t in t_values)
    for t in ts:
        _check_below_blow_up(t, t_star)
    sol = solve(problem, N)
    rows = []
    for t in ts:
        exact = eval_closed_form(cf, t, digits)
        adm = evaluate(sol, N, t, digits)
        with localcontext() as ctx:
            ctx.prec = digits
            err = abs(exact - adm)
        rows.append(ComparisonRow(to_decimal(t, digits), exact, adm, err))
    return ComparisonTable(problem.label, N, tuple(rows), digits)


def _row_strings(row: ComparisonRow, digits: int) -> list[str]:
    return [format_number(getattr(row, col), digits) for col in COLUMNS]


def export_table(table: ComparisonTable, format: str = "csv") -> str:
    """Serialize a table as ``csv``, ``markdown`` or ``json``."""
    d = table.digits
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for row in table.rows:
            w.writerow(_row_strings(row, d))
        return buf.getvalue()
    if format == "markdown":
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        for row in table.rows:
            lines.append("| " + " | ".join(_row_strings(row, d)) + " |")
        return "\n".join(lines) + "\n"
    if format == "json":
        obj = {
            "problem": table.label,
            "order": table.order,
            "digits": d,
            "columns": list(COLUMNS),
            "rows": [dict(zip(COLUMNS, _row_strings(row, d))) for row in table.rows],
        }
        return json.dumps(obj, indent=2) + "\n"
    raise ValueError(f"unknown table format {format!r}")


def parse_table_json(text: str) -> ComparisonTable:
    obj = json.loads(text)
    rows = tuple(
        ComparisonRow(*(Decimal(r[col]) for col in COLUMNS)) for r in obj["rows"]
    )
    return ComparisonTable(obj["problem"], obj["order"], rows, obj["digits"])


def figure_data(
    problem: ODEProblem,
    N: int,
    t_min,
    t_max,
    samples: int,
    digits: int = DEFAULT_DIGITS,
) -> str:
    """CSV ``t,exact,adm`` on ``samples`` equally spaced points of [t_min, t_max]."""
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    lo, hi = as_rational(t_min), as_rational(t_max)
    if not lo < hi:
        raise ValueError(f"need t_min < t_max, got [{lo}, {hi}]")
    cf = closed_form(problem)
    _check_below_blow_up(hi, blow_up_time(cf, digits))
    sol = solve(problem, N)
    step = (hi - lo) / (samples - 1)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("t", "exact", "adm"))
    for i in range(samples):
        t = lo + i * step
        w.writerow((
            format_number(to_decimal(t, digits), digits),
            format_number(eval_closed_form(cf, t, digits), digits),
            format_number(evaluate(sol, N, t, digits), digits),
        ))
    return buf.getvalue()


def list_polynomials(eta: int, max_order: int, format: str = "plain") -> str:
    """A_0 ... A_max_order, one per line (plain/latex) or as a JSON array."""
    if max_order < 0:
        raise ValueError(f"max_order must be >= 0, got {max_order}")
    polys = [generate_adomian(eta, n) for n in range(max_order + 1)]
    if format == "json":
        return json.dumps([to_json_obj(A) for A in polys], separators=(",", ":"))
    if format == "plain":
        return "\n".join(f"A{A.order} = {render(A, 'plain')}" for A in polys)
    if format == "latex":
        return "\n".join(f"A_{{{A.order}}} = {render(A, 'latex')}" for A in polys)
    raise ValueError(f"unknown format {format!r}")
