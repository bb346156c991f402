"""Adomian decomposition for u' = c*u + b*u**eta + f(t), u(0) = u0.

All terms of the equation are kept on the right-hand side, so each new
component is the integral of the linear part plus the Adomian polynomial:

    u_0     = u0 + int_0^t f
    u_{n+1} = int_0^t (c*u_n + b*A_n(u_0, ..., u_n))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .errors import OrderRangeError
from .numeric import (
    DEFAULT_DIGITS,
    TimePolynomial,
    as_rational,
    poly_add,
    poly_eval_hp,
    poly_integrate,
    poly_scale,
)
from .polynomials import generate_adomian, substitute

__all__ = ["ODEProblem", "PRESETS", "SeriesSolution", "evaluate", "partial_sum", "solve"]


@dataclass(frozen=True)
class ODEProblem:
    c: Fraction
    b: Fraction
    eta: int
    u0: Fraction
    forcing: TimePolynomial = field(default_factory=TimePolynomial)
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "u0", as_rational(self.u0))
        if not isinstance(self.forcing, TimePolynomial):
            object.__setattr__(self, "forcing", TimePolynomial(tuple(self.forcing)))
        if int(self.eta) != self.eta or self.eta < 0:
            raise ValueError(f"eta must be a nonnegative integer, got {self.eta!r}")
        object.__setattr__(self, "eta", int(self.eta))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return f"u' = {self.c}*u + {self.b}*u^{self.eta} + f(t), u(0) = {self.u0}"


# du/dt - 5u = u^3 and du/dt - u = u^4, both with u(0) = 1
PRESETS = {
    "problem1": ODEProblem(c=5, b=1, eta=3, u0=1, name="problem1"),
    "problem2": ODEProblem(c=1, b=1, eta=4, u0=1, name="problem2"),
}


@dataclass(frozen=True)
class SeriesSolution:
    problem: ODEProblem
    components: tuple

    @property
    def order(self) -> int:
        return len(self.components) - 1


def solve(problem: ODEProblem, N: int) -> SeriesSolution:
    """Components u_0 ... u_N of the decomposition series, exactly."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    comps = [poly_add(TimePolynomial.constant(problem.u0), poly_integrate(problem.forcing))]
    for n in range(N):
        linear = poly_scale(comps[n], problem.c)
        if problem.b != 0:
            nonlinear = poly_scale(substitute(generate_adomian(problem.eta, n), comps), problem.b)
        else:
            nonlinear = TimePolynomial()
        comps.append(poly_integrate(poly_add(linear, nonlinear)))
    return SeriesSolution(problem, tuple(comps))


def partial_sum(sol: SeriesSolution, m: int) -> TimePolynomial:
    if not 0 <= m <= sol.order:
        raise OrderRangeError(f"m={m} outside 0..{sol.order}")
    acc = TimePolynomial()
    for comp in sol.components[: m + 1]:
        acc = poly_add(acc, comp)
    return acc


def evaluate(sol: SeriesSolution, m: int, t, digits: int = DEFAULT_DIGITS) -> Decimal:
    return poly_eval_hp(partial_sum(sol, m), t, digits)
