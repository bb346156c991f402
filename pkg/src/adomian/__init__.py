"""Exact Adomian polynomials and decomposition series for u' = c*u + b*u**eta + f."""
from .kernels import BACKEND
from .numeric import TimePolynomial
from .polynomials import (
    AdomianPolynomial,
    Monomial,
    canonicalize,
    coefficient_sum,
    generate_adomian,
    generate_adomian_oracle,
    render,
    substitute,
)
from .reference import blow_up_time, closed_form, eval_closed_form, taylor_series
from .solver import PRESETS, ODEProblem, SeriesSolution, evaluate, partial_sum, solve

__version__ = "0.1.0"
