# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contract as ``adomian._kernels_py``."""
from fractions import Fraction
from math import factorial, gcd


cdef object _common_denominator(list coeffs):
    cdef object den = 1
    cdef object d
    for c in coeffs:
        d = c.denominator
        den = den // gcd(den, d) * d
    return den


def trunc_convolve(list a, list b, Py_ssize_t limit):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t top, i, j, jmax, imax
    cdef object x, y, da, db, den
    cdef list ia, ib, out
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
    imax = la if la < top + 1 else top + 1
    for i in range(imax):
        x = ia[i]
        if x == 0:
            continue
        jmax = lb - 1 if lb - 1 < top - i else top - i
        for j in range(jmax + 1):
            y = ib[j]
            if y:
                out[i + j] += x * y
    while out and out[len(out) - 1] == 0:
        out.pop()
    den = da * db
    return [Fraction(v, den) for v in out]


cdef void _rec(Py_ssize_t remaining, Py_ssize_t max_part, Py_ssize_t slots,
               Py_ssize_t eta, object feta, list parts, list out):
    cdef Py_ssize_t p, i, m, k, zeros, hi
    cdef object denom
    cdef list counts
    if remaining == 0:
        zeros = eta - len(parts)
        counts = []
        if zeros:
            counts.append((0, zeros))
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
    hi = remaining if remaining < max_part else max_part
    p = hi
    while p > 0:
        if remaining - p > (slots - 1) * p:
            break
        parts.append(p)
        _rec(remaining - p, p, slots - 1, eta, feta, parts, out)
        parts.pop()
        p -= 1


def weighted_multisets(Py_ssize_t eta, Py_ssize_t n):
    cdef list out = []
    if eta < 0 or n < 0:
        return out
    if eta == 0:
        if n == 0:
            out.append((1, ()))
        return out
    _rec(n, n, eta, eta, factorial(eta), [], out)
    return out
