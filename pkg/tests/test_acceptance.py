"""Exit criteria. Each test records one PASS/FAIL line, printed at the end
of the pytest run by the hook in conftest.py."""
import random
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import pytest

from adomian import (
    PRESETS,
    ODEProblem,
    blow_up_time,
    closed_form,
    coefficient_sum,
    eval_closed_form,
    evaluate,
    generate_adomian,
    generate_adomian_oracle,
    partial_sum,
    solve,
    taylor_series,
)
from adomian.numeric import TimePolynomial
from adomian.polynomials import Monomial
from adomian.tables import DEFAULT_T_GRID, build_comparison_table

from printed_listings import PRINTED, parse_listing
from printed_tables import TABLES

pytestmark = pytest.mark.acceptance

RESULTS = {}


def record(number, ok, detail):
    RESULTS[number] = (ok, detail)
    assert ok, f"criterion {number}: {detail}"


def merged(monos):
    out = {}
    for m in monos:
        out[m.exponents] = out.get(m.exponents, 0) + m.coefficient
    return out


def test_01_golden_listings():
    start = time.perf_counter()
    mismatches = []
    for eta in (3, 4):
        for n in range(9):
            got = generate_adomian(eta, n).as_dict()
            if got != merged(parse_listing(PRINTED[eta][n])):
                mismatches.append(f"eta={eta} A{n}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 1.0
    record(1, ok, f"18 listings, mismatched: {mismatches or 'none'}; {elapsed:.3f}s")


def _valid(m, eta, n):
    return m.degree == eta and m.weight == n


@pytest.mark.parametrize(
    "eta,n,printed_bad,generated_good",
    [
        (3, 9, Monomial(3, ((2, 2), (4, 1))), Monomial(3, ((1, 1), (4, 2)))),
        (4, 10, Monomial(12, ((1, 1), (2, 2), (4, 1))), Monomial(12, ((1, 1), (2, 2), (5, 1)))),
    ],
)
def test_02_errata_detection(eta, n, printed_bad, generated_good):
    gen = generate_adomian(eta, n)
    printed = parse_listing(PRINTED[eta][n])
    printed_only = set(printed) - set(gen.terms)
    gen_only = set(gen.terms) - set(printed)
    ok = (
        printed_only == {printed_bad}
        and gen_only <= {generated_good}
        and generated_good in gen.terms
        and all(_valid(m, eta, n) for m in gen.terms)
        and not _valid(printed_bad, eta, n)
    )
    key = "2" if eta == 3 else "2b"
    record(key, ok, f"eta={eta} A{n}: printed-only {[str(m) for m in printed_only]}, "
                    f"generated-only {[str(m) for m in gen_only]}")


def test_03_oracle_equivalence():
    generate_adomian.cache_clear()
    start = time.perf_counter()
    bad = [(e, n) for e in range(1, 7) for n in range(13)
           if generate_adomian(e, n) != generate_adomian_oracle(e, n)]
    elapsed = time.perf_counter() - start
    record(3, not bad and elapsed < 5.0, f"78 pairs, mismatches {bad or 'none'}; {elapsed:.2f}s")


def _brute_count_and_sum(eta, n):
    # every multiset of eta indices with sum n is one term; its coefficient
    # counts the orderings, so the total is the number of ordered tuples
    terms = sum(1 for c in combinations_with_replacement(range(n + 1), eta) if sum(c) == n)
    ordered = 0
    for c in combinations_with_replacement(range(n + 1), eta):
        if sum(c) == n:
            ways = factorial(eta)
            for k in set(c):
                ways //= factorial(c.count(k))
            ordered += ways
    return terms, ordered


def test_04_combinatorial_identities():
    bad = []
    for eta in range(1, 7):
        for n in range(13):
            A = generate_adomian(eta, n)
            terms, ordered = _brute_count_and_sum(eta, n)
            binom = factorial(n + eta - 1) // (factorial(eta - 1) * factorial(n))
            if not (coefficient_sum(A) == binom == ordered and len(A) == terms):
                bad.append((eta, n))
    record(4, not bad, f"78 pairs, failures {bad or 'none'}")


def _coeffs(sol):
    return [comp.coeff(n) for n, comp in enumerate(sol.components)]


def test_05_problem1_series():
    want = [1, 6, 24, 100, 470, 2336, Fraction(35588, 3), Fraction(1282984, 21), Fraction(6681580, 21)]
    got = _coeffs(solve(PRESETS["problem1"], 8))
    record(5, got == want, f"coefficients {[str(x) for x in got]}")


def test_06_problem2_series():
    want = [1, 2, 5, Fraction(49, 3), Fraction(701, 12), Fraction(13081, 60),
            Fraction(60193, 72), Fraction(8231329, 2520)]
    got = _coeffs(solve(PRESETS["problem2"], 7))
    record(6, got == want, f"coefficients {[str(x) for x in got]}")


def test_07_cross_oracle_exactness():
    start = time.perf_counter()
    ok = all(partial_sum(solve(p, 20), 20) == taylor_series(p, 20) for p in PRESETS.values())
    rng = random.Random(7)
    for _ in range(20):
        p = ODEProblem(
            c=Fraction(rng.randint(-6, 6), 2),
            b=Fraction(rng.randint(-9, 9), 3),
            eta=rng.choice([2, 3, 4]),
            u0=rng.choice([1, -1, Fraction(1, 2), Fraction(-1, 2)]),
        )
        ok = ok and partial_sum(solve(p, 10), 10) == taylor_series(p, 10)
    elapsed = time.perf_counter() - start
    record(7, ok and elapsed < 30, f"2 presets at N=20, 20 random at N=10; {elapsed:.2f}s")


@pytest.mark.parametrize("name,bound", [("problem1", Decimal("2e-3")), ("problem2", Decimal("5e-5"))])
def test_08_table_own_oracle(name, bound):
    rows = build_comparison_table(PRESETS[name], 11, DEFAULT_T_GRID, 50).rows
    err = {str(r.t.normalize()) if r.t else "0": r.abs_error for r in rows}
    errs = [r.abs_error for r in rows]
    neg, pos = errs[:6], errs[5:]
    ok = (
        err["-0.1"] < bound and err["0.1"] < bound
        and all(x > y for x, y in zip(neg, neg[1:]))
        and all(x < y for x, y in zip(pos, pos[1:]))
    )
    record("8" if name == "problem1" else "8b", ok,
           f"{name}: err(-0.10)={err['-0.1']:.3e}, err(0.10)={err['0.1']:.3e}, bound {bound}")


def _rel(a, b):
    with localcontext() as ctx:
        ctx.prec = 30
        return abs((a - b) / b)


@pytest.mark.parametrize("name", ["problem1", "problem2"])
def test_09_printed_table_cross_check(name):
    p = PRESETS[name]
    sol = solve(p, 11)
    cf = closed_form(p)
    adm_hits = 0
    exact_misses = []
    for t, (exact_col, adm_col) in TABLES[name].items():
        if _rel(Decimal(adm_col), evaluate(sol, 11, t, 50)) <= Decimal("1e-6"):
            adm_hits += 1
        if _rel(Decimal(exact_col), eval_closed_form(cf, t, 50)) > Decimal("5e-3"):
            exact_misses.append(t)
    # t = 0 rows, read at the intended scale 1.0
    zero_ok = evaluate(sol, 11, 0, 50) == 1 and eval_closed_form(cf, 0, 50) == 1
    ok = adm_hits >= 9 and not exact_misses and zero_ok
    record("9" if name == "problem1" else "9b", ok,
           f"{name}: ADM column within 1e-6 on {adm_hits}/10 rows; "
           f"exact column beyond 5e-3 at t={exact_misses or 'none'}")


def _bisect(f, lo, hi):
    with localcontext() as ctx:
        ctx.prec = 60
        lo, hi = Decimal(lo), Decimal(hi)
        for _ in range(200):
            mid = (lo + hi) / 2
            if (f(mid) > 0) == (f(lo) > 0):
                lo = mid
            else:
                hi = mid
        return lo


def test_10_blow_up_times():
    with localcontext() as ctx:
        ctx.prec = 40
        ln6, ln2 = Decimal(6).ln() / 10, Decimal(2).ln() / 3
    t1 = blow_up_time(closed_form(PRESETS["problem1"]), 40)
    t2 = blow_up_time(closed_form(PRESETS["problem2"]), 40)
    b1 = _bisect(lambda t: 6 * (-10 * t).exp() - 1, 0, 1)
    b2 = _bisect(lambda t: 2 * (-3 * t).exp() - 1, 0, 1)
    tol = Decimal("1e-12")
    ok = all(abs(x - y) < tol for x, y in [(t1, ln6), (b1, ln6), (t2, ln2), (b2, ln2)])
    record(10, ok, f"t1*={t1:.13f}, t2*={t2:.13f}")


def test_11_performance():
    generate_adomian.cache_clear()
    start = time.perf_counter()
    generate_adomian(5, 30)
    gen_time = time.perf_counter() - start
    generate_adomian.cache_clear()
    start = time.perf_counter()
    solve(PRESETS["problem1"], 30)
    solve_time = time.perf_counter() - start
    ok = gen_time < 2 and solve_time < 5
    record(11, ok, f"generate_adomian(5, 30) {gen_time:.3f}s, solve(problem1, 30) {solve_time:.3f}s")
