"""Ground truth for the Bernoulli equation u' = c*u + b*u**eta.

The substitution v = u**(1 - eta) linearizes the equation to
v' = (1 - eta)*(c*v + b), whence for c != 0

    v(t) = (v0 + b/c) * exp((1 - eta)*c*t) - b/c

and for c == 0 the limit v(t) = v0 - (eta - 1)*b*t. The solution is real and
finite while v keeps the sign of v0; the first zero of v is the blow-up time.

:func:`taylor_series` is an unrelated route to the same series: it advances
the Taylor coefficients of u directly from the equation.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import SingularityError, UnsupportedProblemError
from .numeric import (
    DEFAULT_DIGITS,
    GUARD_DIGITS,
    TimePolynomial,
    hp_exp,
    hp_ln,
    poly_pow_trunc,
    to_decimal,
)
from .solver import ODEProblem

__all__ = [
    "ClosedFormSolution",
    "ComparisonRow",
    "blow_up_time",
    "closed_form",
    "eval_closed_form",
    "taylor_series",
]


@dataclass(frozen=True)
class ClosedFormSolution:
    c: Fraction
    b: Fraction
    eta: int
    v0: Fraction
    shift: Fraction | None
    decay: Fraction
    u0: Fraction
    # u0 == 0 gives u identically zero; v0 is meaningless then
    identically_zero: bool = False


@dataclass(frozen=True)
class ComparisonRow:
    t: Decimal
    exact: Decimal
    adm: Decimal
    abs_error: Decimal


def closed_form(problem: ODEProblem) -> ClosedFormSolution:
    eta, c, b, u0 = problem.eta, problem.c, problem.b, problem.u0
    if eta < 2:
        raise UnsupportedProblemError(f"closed form needs eta >= 2, got {eta}")
    if not problem.forcing.is_zero():
        raise UnsupportedProblemError("closed form needs zero forcing")
    decay = (1 - eta) * c
    shift = b / c if c != 0 else None
    if u0 == 0:
        return ClosedFormSolution(c, b, eta, Fraction(0), shift, decay, u0, identically_zero=True)
    v0 = u0 ** (1 - eta)
    return ClosedFormSolution(c, b, eta, v0, shift, decay, u0)


def _v_at(cf: ClosedFormSolution, t: Decimal, work: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = work
        if cf.c == 0:
            return to_decimal(cf.v0, work) - (cf.eta - 1) * to_decimal(cf.b, work) * t
        shift = to_decimal(cf.shift, work)
        growth = hp_exp(to_decimal(cf.decay, work) * t, work)
        return (to_decimal(cf.v0, work) + shift) * growth - shift


def eval_closed_form(cf: ClosedFormSolution, t, digits: int = DEFAULT_DIGITS) -> Decimal:
    """u(t) at ``digits`` significant digits on the real branch through u0."""
    if digits < 10:
        raise ValueError(f"digits must be >= 10, got {digits}")
    if cf.identically_zero:
        return Decimal(0)
    work = digits + GUARD_DIGITS
    td = to_decimal(t, work)
    v = _v_at(cf, td, work)
    if v == 0 or (v > 0) != (cf.v0 > 0):
        raise SingularityError(td, blow_up_time(cf, digits))
    with localcontext() as ctx:
        ctx.prec = work
        mag = hp_exp(-hp_ln(abs(v), work) / (cf.eta - 1), work)
        u = mag if cf.u0 > 0 else -mag
        ctx.prec = digits
        return +u


def blow_up_time(cf: ClosedFormSolution, digits: int = DEFAULT_DIGITS) -> Decimal | None:
    """Smallest t > 0 with v(t) = 0, or None if v never vanishes for t > 0."""
    if cf.identically_zero or cf.b == 0:
        return None
    if cf.c == 0:
        t_star = cf.v0 / ((cf.eta - 1) * cf.b)
        return to_decimal(t_star, digits) if t_star > 0 else None
    ratio = (cf.c * cf.v0 + cf.b) / cf.b
    if ratio <= 0 or ratio == 1:
        return None
    work = digits + GUARD_DIGITS
    with localcontext() as ctx:
        ctx.prec = work
        t_star = hp_ln(ratio, work) / to_decimal((cf.eta - 1) * cf.c, work)
        if t_star <= 0:
            return None
        ctx.prec = digits
        return +t_star


def taylor_series(problem: ODEProblem, N: int) -> TimePolynomial:
    """Taylor polynomial of degree N of the solution, by coefficient recurrence."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    a = [problem.u0]
    for k in range(N):
        power = poly_pow_trunc(TimePolynomial(tuple(a)), problem.eta, k)
        nxt = problem.c * a[k] + problem.b * power.coeff(k) + problem.forcing.coeff(k)
        a.append(nxt / (k + 1))
    return TimePolynomial(tuple(a))
