"""Exact rational polynomials in t and high-precision real evaluation.

Rationals are :class:`fractions.Fraction`; high-precision reals are
:class:`decimal.Decimal` values produced under a local context whose
precision is the requested number of significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC

from .kernels import trunc_convolve

__all__ = [
    "DEFAULT_DIGITS",
    "TimePolynomial",
    "as_rational",
    "format_time_polynomial",
    "hp_exp",
    "hp_ln",
    "poly_add",
    "poly_derivative",
    "poly_eval_hp",
    "poly_integrate",
    "poly_mul",
    "poly_pow_trunc",
    "poly_scale",
    "to_decimal",
]

DEFAULT_DIGITS = 50
GUARD_DIGITS = 10


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, decimal strings or "p/q" strings to a Fraction.

    Floats are rejected: they would silently import binary rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class TimePolynomial:
    """Dense univariate polynomial in t; ``coeffs[k]`` multiplies t**k."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, value) -> "TimePolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, coeff, degree: int) -> "TimePolynomial":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        if not isinstance(other, TimePolynomial):
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TimePolynomial):
            return NotImplemented
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self):
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TimePolynomial):
            return poly_mul(self, other)
        try:
            return poly_scale(self, as_rational(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_time_polynomial(self)


def format_time_polynomial(p: TimePolynomial, var: str = "t") -> str:
    """Plain text such as ``1 + 6*t - 35588/3*t^6``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def poly_add(p: TimePolynomial, q: TimePolynomial) -> TimePolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return TimePolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def poly_scale(p: TimePolynomial, s) -> TimePolynomial:
    s = as_rational(s)
    if s == 0:
        return TimePolynomial()
    return TimePolynomial(tuple(c * s for c in p.coeffs))


def poly_mul(p: TimePolynomial, q: TimePolynomial) -> TimePolynomial:
    return TimePolynomial(tuple(trunc_convolve(list(p.coeffs), list(q.coeffs), -1)))


def poly_pow_trunc(p: TimePolynomial, eta: int, N: int) -> TimePolynomial:
    """``p**eta`` with every coefficient of degree > N discarded."""
    if eta < 0:
        raise ValueError("eta must be >= 0")
    if N < 0:
        return TimePolynomial()
    result = [Fraction(1)]
    base = list(p.coeffs[: N + 1])
    for _ in range(eta):
        result = trunc_convolve(result, base, N)
        if not result:
            break
    return TimePolynomial(tuple(result))


def poly_integrate(p: TimePolynomial) -> TimePolynomial:
    """Antiderivative vanishing at t = 0."""
    if p.is_zero():
        return p
    return TimePolynomial((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(p.coeffs)))


def poly_derivative(p: TimePolynomial) -> TimePolynomial:
    return TimePolynomial(tuple(c * k for k, c in enumerate(p.coeffs) if k > 0))


def _check_digits(digits: int) -> None:
    if digits < 10:
        raise ValueError(f"digits must be >= 10, got {digits}")


def to_decimal(x, digits: int) -> Decimal:
    """Round an exact or decimal value to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        if isinstance(x, Decimal):
            return +x
        if isinstance(x, float):
            return +Decimal(repr(x))
        q = as_rational(x)
        return Decimal(q.numerator) / Decimal(q.denominator)


def poly_eval_hp(p: TimePolynomial, t, digits: int = DEFAULT_DIGITS) -> Decimal:
    """Horner evaluation of ``p`` at ``t``, rounded to ``digits`` digits.

    ``t`` may be exact (int, Fraction, decimal string) or a Decimal.
    """
    _check_digits(digits)
    work = digits + GUARD_DIGITS
    td = to_decimal(t, work)
    with localcontext() as ctx:
        ctx.prec = work
        acc = Decimal(0)
        for c in reversed(p.coeffs):
            acc = acc * td + Decimal(c.numerator) / Decimal(c.denominator)
        ctx.prec = digits
        return +acc


def hp_exp(x, digits: int = DEFAULT_DIGITS) -> Decimal:
    """``e**x`` to ``digits`` significant digits.

    The argument is halved until ``|r| < 2**-8``, the Taylor series of
    ``e**r`` is summed, and the result squared back. Each squaring loses
    a fraction of a digit, so the working precision carries one guard digit
    per squaring on top of the base guard.
    """
    _check_digits(digits)
    with localcontext() as ctx:
        ctx.prec = digits + GUARD_DIGITS
        xd = to_decimal(x, digits + GUARD_DIGITS)
        if xd == 0:
            return Decimal(1)
        squarings = 8
        mag = abs(xd)
        while mag >= 1:
            mag /= 2
            squarings += 1
        ctx.prec = digits + GUARD_DIGITS + squarings
        r = xd / (Decimal(2) ** squarings)
        tol = Decimal(10) ** -(ctx.prec + 2)
        total = Decimal(1)
        term = Decimal(1)
        k = 0
        while True:
            k += 1
            term = term * r / k
            total += term
            if abs(term) < tol:
                break
        for _ in range(squarings):
            total = total * total
        ctx.prec = digits
        return +total


def hp_ln(x, digits: int = DEFAULT_DIGITS) -> Decimal:
    """Natural log via :meth:`decimal.Decimal.ln` (correctly rounded)."""
    _check_digits(digits)
    with localcontext() as ctx:
        ctx.prec = digits + GUARD_DIGITS
        xd = to_decimal(x, digits + GUARD_DIGITS)
        if xd <= 0:
            raise ValueError(f"ln of non-positive value {xd}")
        val = xd.ln()
        ctx.prec = digits
        return +val

