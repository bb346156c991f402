"""Pure-Python hot kernels.

Reference implementation for the compiled ``_ckernels`` module. Both must
return identical values for identical inputs.
"""
from fractions import Fraction
from math import factorial, gcd


def _common_denominator(coeffs):
    den = 1
    for c in coeffs:
        d = c.denominator
        den = den // gcd(den, d) * d
    return den


def trunc_convolve(a, b, limit):
    """Exact Cauchy product of two rational coefficient lists.

    Coefficients of degree > ``limit`` are never formed; ``limit < 0``
    means no truncation. Trailing zeros are stripped from the result.
    """
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    top = la + lb - 2
    if 0 <= limit < top:
        top = limit
    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = [c.numerator * (da // c.denominator) for c in a]
    ib = [c.numerator * (db // c.denominator) for c in b]
    out = [0] * (top + 1)
    for i in range(min(la, top + 1)):
        x = ia[i]
        if x == 0:
            continue
        jmax = min(lb - 1, top - i)
        for j in range(jmax + 1):
            y = ib[j]
            if y:
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    den = da * db
    return [Fraction(v, den) for v in out]


def weighted_multisets(eta, n):
    """All multisets of ``eta`` nonnegative indices summing to ``n``.

    Yields a list of ``(multinomial, counts)`` where ``counts`` is a tuple of
    ``(index, multiplicity)`` pairs in increasing index order and
    ``multinomial = eta! / prod(multiplicity!)``.
    """
    out = []
    if eta < 0 or n < 0:
        return out
    if eta == 0:
        if n == 0:
            out.append((1, ()))
        return out
    feta = factorial(eta)
    parts = []

    def rec(remaining, max_part, slots):
        if remaining == 0:
            zeros = eta - len(parts)
            counts = []
            if zeros:
                counts.append((0, zeros))
            # parts are nonincreasing; walk backwards for increasing order
            i = len(parts) - 1
            while i >= 0:
                k = parts[i]
                m = 1
                while i - m >= 0 and parts[i - m] == k:
                    m += 1
                counts.append((k, m))
                i -= m
            denom = 1
            for _, m in counts:
                denom *= factorial(m)
            out.append((feta // denom, tuple(counts)))
            return
        if slots == 0:
            return
        for p in range(min(remaining, max_part), 0, -1):
            # remaining - p must fit into slots - 1 parts of size <= p
            if remaining - p > (slots - 1) * p:
                break
            parts.append(p)
            rec(remaining - p, p, slots - 1)
            parts.pop()

    rec(n, n, eta)
    return out
