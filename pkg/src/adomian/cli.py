"""Command-line interface.

    adomian polys --eta 3 --max-order 10
    adomian solve --preset problem1 --order 8
    adomian table --preset problem2 --digits 12 --format markdown
    adomian figure --preset problem1 --t-min -0.14 --t-max 0.14 --samples 29

Exit codes: 0 success, 2 bad arguments, 3 domain error (singularity).
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .errors import DomainError
from .numeric import DEFAULT_DIGITS, TimePolynomial, format_time_polynomial
from .solver import PRESETS, ODEProblem, partial_sum, solve
from .tables import (
    DEFAULT_ORDER,
    DEFAULT_T_GRID,
    build_comparison_table,
    export_table,
    figure_data,
    list_polynomials,
)

EXIT_DOMAIN = 3


def _rational(ctx, param, value):
    if value is None:
        return None
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational like 3 or -5/2, got {value!r}")


def _rational_list(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(Fraction(v.strip()) for v in value.split(",") if v.strip())
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected comma-separated rationals, got {value!r}")


def problem_options(f):
    opts = [
        click.option("--preset", type=click.Choice(sorted(PRESETS)), help="Built-in problem."),
        click.option("--c", "c", callback=_rational, help="Linear coefficient (p/q)."),
        click.option("--b", "b", callback=_rational, help="Nonlinear coefficient (p/q)."),
        click.option("--eta", type=click.IntRange(min=0), help="Exponent of u^eta."),
        click.option("--u0", callback=_rational, help="Initial value u(0) (p/q)."),
        click.option("--forcing", callback=_rational_list, help="Forcing coefficients c0,c1,..."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _problem(preset, c, b, eta, u0, forcing) -> ODEProblem:
    explicit = {"--c": c, "--b": b, "--eta": eta, "--u0": u0}
    if preset is not None:
        given = [k for k, v in explicit.items() if v is not None]
        if given or forcing is not None:
            raise click.UsageError("--preset cannot be combined with explicit coefficients")
        return PRESETS[preset]
    missing = [k for k, v in explicit.items() if v is None]
    if missing:
        raise click.UsageError(f"give --preset or all of --c --b --eta --u0 (missing {' '.join(missing)})")
    return ODEProblem(c=c, b=b, eta=eta, u0=u0, forcing=TimePolynomial(forcing or ()))


def _emit(text: str, out) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _domain_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)


@click.group()
def cli():
    """Exact Adomian polynomials and decomposition series."""


@cli.command()
@click.option("--eta", type=click.IntRange(min=0), required=True)
@click.option("--max-order", type=click.IntRange(min=0), required=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "latex", "json"]), default="plain")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def polys(eta, max_order, fmt, out):
    """List A_0 ... A_max-order for N(u) = u^eta."""
    _emit(list_polynomials(eta, max_order, fmt), out)


@cli.command("solve")
@problem_options
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_ORDER, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
def solve_cmd(preset, c, b, eta, u0, forcing, order, fmt):
    """Print components u_0 ... u_order and their sum."""
    problem = _problem(preset, c, b, eta, u0, forcing)
    sol = solve(problem, order)
    total = partial_sum(sol, order)
    if fmt == "json":
        obj = {
            "problem": problem.label,
            "c": str(problem.c),
            "b": str(problem.b),
            "eta": problem.eta,
            "u0": str(problem.u0),
            "forcing": [str(x) for x in problem.forcing.coeffs],
            "order": order,
            "components": [[str(x) for x in comp.coeffs] for comp in sol.components],
            "partial_sum": [str(x) for x in total.coeffs],
        }
        _emit(json.dumps(obj, indent=2), None)
        return
    lines = [f"# {problem.label}"]
    lines += [f"u{n} = {format_time_polynomial(comp)}" for n, comp in enumerate(sol.components)]
    lines.append(f"sum = {format_time_polynomial(total)}")
    _emit("\n".join(lines), None)


@cli.command()
@problem_options
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_ORDER, show_default=True)
@click.option("--t", "t_list", default=",".join(DEFAULT_T_GRID), show_default=True,
              help="Comma-separated evaluation points.")
@click.option("--digits", type=click.IntRange(min=10), default=DEFAULT_DIGITS, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "markdown", "json"]), default="csv")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def table(preset, c, b, eta, u0, forcing, order, t_list, digits, fmt, out):
    """Closed form versus decomposition partial sum on a grid of t."""
    problem = _problem(preset, c, b, eta, u0, forcing)
    ts = _rational_list(None, None, t_list)
    tbl = _domain_guard(build_comparison_table, problem, order, ts, digits)
    _emit(export_table(tbl, fmt), out)


@cli.command()
@problem_options
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_ORDER, show_default=True)
@click.option("--t-min", callback=_rational, default="-0.14", show_default=True)
@click.option("--t-max", callback=_rational, default="0.14", show_default=True)
@click.option("--samples", type=int, default=29, show_default=True)
@click.option("--digits", type=click.IntRange(min=10), default=DEFAULT_DIGITS, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def figure(preset, c, b, eta, u0, forcing, order, t_min, t_max, samples, digits, out):
    """CSV plot data (t, exact, adm) on an equally spaced grid."""
    problem = _problem(preset, c, b, eta, u0, forcing)
    if samples < 2:
        raise click.BadParameter("need at least 2 samples", param_hint="--samples")
    if not t_min < t_max:
        raise click.BadParameter("need --t-min < --t-max", param_hint="--t-min")
    _emit(_domain_guard(figure_data, problem, order, t_min, t_max, samples, digits), out)


def main():
    cli(prog_name="adomian")


if __name__ == "__main__":
    main()
