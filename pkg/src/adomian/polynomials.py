"""Adomian polynomials for the power nonlinearity N(u) = u**eta.

Two independent constructions are provided:

* :func:`generate_adomian` enumerates the multisets of indices
  ``k_1 <= ... <= k_eta`` summing to ``n`` and weights each product by its
  multinomial coefficient (the collected eta-fold convolution).
* :func:`generate_adomian_oracle` expands ``(u_0 + u_1 L + ... + u_n L**n)**eta``
  symbolically, truncated at ``L**n``, and reads off the ``L**n`` coefficient,
  which equals ``(1/n!) d^n/dL^n N(sum u_k L^k)`` at ``L = 0``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArityError, InvalidMonomialError
from .kernels import weighted_multisets
from .numeric import TimePolynomial, poly_add, poly_mul

__all__ = [
    "AdomianPolynomial",
    "LambdaSeries",
    "Monomial",
    "canonicalize",
    "coefficient_sum",
    "generate_adomian",
    "generate_adomian_oracle",
    "render",
    "substitute",
]


@dataclass(frozen=True)
class Monomial:
    """``coefficient * prod(u_k ** e_k)``.

    ``exponents`` is a tuple of ``(k, e_k)`` pairs, increasing in ``k``,
    with every ``e_k >= 1``.
    """

    coefficient: int
    exponents: tuple = ()

    def __post_init__(self):
        exps = self.exponents
        if isinstance(exps, dict):
            exps = exps.items()
        merged: dict[int, int] = {}
        for k, e in exps:
            if k < 0 or e < 0:
                raise ValueError(f"negative index or exponent in {self.exponents!r}")
            if e:
                merged[k] = merged.get(k, 0) + e
        object.__setattr__(self, "exponents", tuple(sorted(merged.items())))
        if not isinstance(self.coefficient, int) or isinstance(self.coefficient, bool):
            raise TypeError(f"coefficient must be an int, got {self.coefficient!r}")

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in self.exponents)

    def dense(self, length: int) -> tuple:
        vec = [0] * length
        for k, e in self.exponents:
            vec[k] = e
        return tuple(vec)

    def __str__(self) -> str:
        return _render_plain_term(self)


def _sort_key(m: Monomial, length: int):
    # lexicographically descending on (e_0, e_1, ...)
    return tuple(-e for e in m.dense(length))


@dataclass(frozen=True)
class AdomianPolynomial:
    eta: int
    order: int
    terms: tuple = field(default=())

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict:
        return {m.exponents: m.coefficient for m in self.terms}

    def evaluate(self, values: Sequence):
        """Value with ``u_k := values[k]`` (any ring supporting * and **)."""
        total = 0
        for m in self.terms:
            prod = m.coefficient
            for k, e in m.exponents:
                prod = prod * values[k] ** e
            total = total + prod
        return total

    def __str__(self) -> str:
        return render(self, "plain")


def canonicalize(terms: Iterable[Monomial], eta: int, n: int) -> AdomianPolynomial:
    """Merge like terms, drop zeros, sort into canonical order.

    Raises :class:`InvalidMonomialError` for a term whose total degree is not
    ``eta`` or whose weight is not ``n``.
    """
    merged: dict[tuple, int] = {}
    for m in terms:
        if m.degree != eta:
            raise InvalidMonomialError(m, eta, n, f"total degree {m.degree} != {eta}")
        if m.weight != n:
            raise InvalidMonomialError(m, eta, n, f"weight {m.weight} != {n}")
        if m.coefficient < 0:
            raise InvalidMonomialError(m, eta, n, "negative coefficient")
        merged[m.exponents] = merged.get(m.exponents, 0) + m.coefficient
    monos = [Monomial(c, e) for e, c in merged.items() if c != 0]
    monos.sort(key=lambda m: _sort_key(m, n + 1))
    return AdomianPolynomial(eta, n, tuple(monos))


@lru_cache(maxsize=1024)
def generate_adomian(eta: int, n: int) -> AdomianPolynomial:
    """A_n for N(u) = u**eta by multiset enumeration with multinomial weights."""
    if eta < 0 or n < 0:
        raise ValueError(f"eta and n must be >= 0, got eta={eta}, n={n}")
    monos = [Monomial(coeff, counts) for coeff, counts in weighted_multisets(eta, n)]
    return canonicalize(monos, eta, n)


class LambdaSeries:
    """Truncated power series in a formal parameter with symbolic coefficients.

    Coefficient ``j`` is a dict mapping an exponent tuple (see
    :class:`Monomial`) to an integer coefficient.
    """

    def __init__(self, coefficients, truncation: int):
        self.truncation = truncation
        coeffs = [dict(c) for c in coefficients][: truncation + 1]
        coeffs += [{} for _ in range(truncation + 1 - len(coeffs))]
        self.coefficients = coeffs

    @classmethod
    def decomposition(cls, truncation: int) -> "LambdaSeries":
        """``u_0 + u_1 L + ... + u_N L**N``."""
        return cls([{((k, 1),): 1} for k in range(truncation + 1)], truncation)

    @classmethod
    def one(cls, truncation: int) -> "LambdaSeries":
        return cls([{(): 1}], truncation)

    def __mul__(self, other: "LambdaSeries") -> "LambdaSeries":
        N = min(self.truncation, other.truncation)
        out = [{} for _ in range(N + 1)]
        for i in range(N + 1):
            ci = self.coefficients[i]
            if not ci:
                continue
            for j in range(N + 1 - i):
                cj = other.coefficients[j]
                if not cj:
                    continue
                acc = out[i + j]
                for ea, xa in ci.items():
                    for eb, xb in cj.items():
                        key = _multiply_exponents(ea, eb)
                        acc[key] = acc.get(key, 0) + xa * xb
        return LambdaSeries(out, N)

    def __pow__(self, eta: int) -> "LambdaSeries":
        result = LambdaSeries.one(self.truncation)
        for _ in range(eta):
            result = result * self
        return result

    def __len__(self) -> int:
        return len(self.coefficients)


def _multiply_exponents(a: tuple, b: tuple) -> tuple:
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items()))


def generate_adomian_oracle(eta: int, n: int) -> AdomianPolynomial:
    """A_n read off as the L**n coefficient of the truncated eta-th power."""
    if eta < 0 or n < 0:
        raise ValueError(f"eta and n must be >= 0, got eta={eta}, n={n}")
    power = LambdaSeries.decomposition(n) ** eta
    coeff = power.coefficients[n]
    return canonicalize((Monomial(c, e) for e, c in coeff.items()), eta, n)


def coefficient_sum(A: AdomianPolynomial) -> int:
    return sum(m.coefficient for m in A.terms)


def substitute(A: AdomianPolynomial, components: Sequence[TimePolynomial]) -> TimePolynomial:
    """Evaluate A on polynomial components, ``components[k]`` standing for u_k."""
    if len(components) < A.order + 1:
        raise ArityError(
            f"A_{A.order} needs {A.order + 1} components, got {len(components)}"
        )
    powers: dict[tuple[int, int], TimePolynomial] = {}

    def power(k: int, e: int) -> TimePolynomial:
        key = (k, e)
        if key not in powers:
            base = components[k]
            powers[key] = base if e == 1 else poly_mul(power(k, e - 1), base)
        return powers[key]

    total = TimePolynomial()
    for m in A.terms:
        term = TimePolynomial.constant(m.coefficient)
        for k, e in m.exponents:
            term = poly_mul(term, power(k, e))
            if term.is_zero():
                break
        total = poly_add(total, term)
    return total


def _render_plain_term(m: Monomial) -> str:
    factors = [f"u{k}" if e == 1 else f"u{k}^{e}" for k, e in m.exponents]
    if m.coefficient != 1 or not factors:
        factors.insert(0, str(m.coefficient))
    return "*".join(factors)


def _render_latex_term(m: Monomial) -> str:
    body = "".join(
        f"u_{{{k}}}" if e == 1 else f"u_{{{k}}}^{{{e}}}" for k, e in m.exponents
    )
    if m.coefficient != 1 or not body:
        body = f"{m.coefficient}{body}"
    return body


def to_json_obj(A: AdomianPolynomial) -> dict:
    return {
        "eta": A.eta,
        "order": A.order,
        "terms": [
            {"coeff": str(m.coefficient), "exponents": {str(k): e for k, e in m.exponents}}
            for m in A.terms
        ],
    }


def from_json_obj(obj: dict) -> AdomianPolynomial:
    terms = [
        Monomial(int(t["coeff"]), tuple((int(k), int(e)) for k, e in t["exponents"].items()))
        for t in obj["terms"]
    ]
    return canonicalize(terms, int(obj["eta"]), int(obj["order"]))


def render(A: AdomianPolynomial, format: str = "plain") -> str:
    """Text form of A in canonical term order: ``plain``, ``latex`` or ``json``."""
    if format == "json":
        return json.dumps(to_json_obj(A), separators=(",", ":"))
    if format == "plain":
        fn, sep = _render_plain_term, " + "
    elif format == "latex":
        fn, sep = _render_latex_term, " + "
    else:
        raise ValueError(f"unknown format {format!r}")
    if not A.terms:
        return "0"
    return sep.join(fn(m) for m in A.terms)

