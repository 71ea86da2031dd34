"""End-to-end acceptance checks, one test per release criterion.

Each test prints a single PASS line (visible with ``pytest -s``); under
plain ``pytest -v`` the test name itself is the per-criterion verdict.
Numerical criteria are exact unless stated otherwise: rationals are
compared with ``==``, never with float tolerances.
"""

import math
import random
import time
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from cooccur.core import (
    METHOD_CLOSED_FORM,
    Marginals,
    coincidence_test,
    count_empty_intersection,
    count_with_incidence,
    fisher_tail,
    pmf,
    support_bounds,
    tail_cdf_closed_form,
    tail_pmf_summation,
)
from cooccur.exactarith import binomial
from cooccur.fca import Concept, FormalContext, close_features, enumerate_concepts, extent
from cooccur.oracle import (
    histogram_incidence,
    poly_expand_f_minus_top,
    verify_cdf_generating_function,
)


def _report(capsys, name: str, detail: str) -> None:
    # step around capture so every run shows one line per check
    with capsys.disabled():
        print(f"PASS {name}: {detail}")


def test_signature_case_reproduction(capsys):
    """n=510 with the six published frequencies and 19 coincidences."""
    started = time.perf_counter()
    result = coincidence_test(
        Marginals(510, (101, 105, 106, 73, 69, 104)), 19, METHOD_CLOSED_FORM
    )
    elapsed = time.perf_counter() - started
    assert result.p_value.decimal(2) == "5.1e-56"
    assert elapsed < 1.0, f"closed form took {elapsed:.3f}s"
    _report(
        capsys,
        "signature-case",
        f"p renders 5.1e-56 (log10 {result.p_value.log10():.3f}) in {elapsed * 1e3:.0f}ms",
    )


def test_normalization_over_full_grid(capsys):
    """PMF sums to exactly 1 for every n <= 8, k <= 3, every v."""
    started = time.perf_counter()
    grids = 0
    for n in range(1, 9):
        for k in range(1, 4):
            for v in product(range(n + 1), repeat=k):
                m = Marginals(n, v)
                lo, hi = support_bounds(m)
                total = sum((pmf(m, i).value for i in range(lo, hi + 1)), Fraction(0))
                assert total == 1, (n, v)
                grids += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(capsys, "normalization", f"{grids} marginal vectors, {elapsed:.1f}s")


def test_counting_formulas_match_enumeration(capsys):
    """Exhaustive histogram equals the counting formulas, n <= 5, k <= 3."""
    started = time.perf_counter()
    checked = 0
    for n in range(1, 6):
        for k in range(1, 4):
            for v in product(range(n + 1), repeat=k):
                hist = histogram_incidence(n, v, max_n=5, max_k=3)
                assert hist.get(0, 0) == count_empty_intersection(n, v), (n, v)
                for i in range(n + 1):
                    assert hist.get(i, 0) == count_with_incidence(n, v, i), (n, v, i)
                checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _report(capsys, "enumeration-equivalence", f"{checked} marginal vectors, {elapsed:.1f}s")


def test_closed_form_tail_identity_randomized(capsys):
    """Closed-form tail equals the PMF tail sum on 200 random cases."""
    rng = random.Random(20250825)
    for case in range(200):
        n = rng.randint(1, 40)
        k = rng.randint(1, 6)
        v = tuple(rng.randint(0, n) for _ in range(k))
        i = rng.randint(1, n)
        m = Marginals(n, v)
        assert tail_cdf_closed_form(m, i).value == tail_pmf_summation(m, i).value, (
            n,
            v,
            i,
        )
    _report(capsys, "tail-identity", "200 randomized (n,v,i) cases, exact equality")


def test_two_feature_case_is_hypergeometric(capsys):
    """For k=2 the tail equals the hypergeometric upper tail, all n <= 25."""
    started = time.perf_counter()
    cases = 0
    for n in range(1, 26):
        for v1 in range(n + 1):
            for v2 in range(n + 1):
                m = Marginals(n, (v1, v2))
                for i in range(n + 1):
                    ours = (
                        tail_cdf_closed_form(m, i).value
                        if i >= 1
                        else tail_pmf_summation(m, i).value
                    )
                    assert ours == fisher_tail(n, v1, v2, i).value, (n, v1, v2, i)
                    cases += 1
    elapsed = time.perf_counter() - started
    _report(capsys, "two-feature-hypergeometric", f"{cases} cases, {elapsed:.1f}s")


def test_generating_function_identities(capsys):
    """Polynomial coefficients reproduce the counts, n <= 5, k <= 3."""
    for n in range(1, 6):
        for k in range(1, 4):
            poly = poly_expand_f_minus_top(n, k)
            for v in product(range(n + 1), repeat=k):
                assert poly.coefficient(v) == count_empty_intersection(n, v), (n, v)
    checked = 0
    for n in range(1, 6):
        for k in range(1, 4):
            for i in range(n + 1):
                assert verify_cdf_generating_function(n, k, i), (n, k, i)
                checked += 1
    _report(capsys, "generating-functions", f"all n<=5 k<=3 grids, {checked} tail polynomials")


def test_binomial_lemma_identities(capsys):
    """The two binomial identities the closed form rests on, up to 40."""
    for a in range(41):
        for b in range(a + 1):
            for c in range(b + 1):
                assert binomial(a, b) * binomial(b, c) == binomial(a - c, a - b) * binomial(a, c)
    for g in range(1, 41):
        for l in range(g + 1):
            partial = sum((-1) ** h * binomial(g, h) for h in range(l + 1))
            assert partial == (-1) ** l * binomial(g - 1, l)
    _report(capsys, "lemma-identities", "trinomial revision and alternating row sums to 40")


def test_concept_enumeration_completeness(capsys):
    """Fixpoint enumeration equals powerset closure on 200 random contexts."""
    rng = random.Random(6174)
    for case in range(200):
        n = rng.randint(1, 8)
        k = rng.randint(1, 8)
        ctx = FormalContext(
            [f"s{idx}" for idx in range(n)],
            [f"f{idx}" for idx in range(k)],
            [[rng.randint(0, 1) for _ in range(k)] for _ in range(n)],
        )
        brute = set()
        for size in range(k + 1):
            for chosen in combinations(ctx.features, size):
                closed = close_features(ctx, chosen)
                brute.add(Concept(closed, extent(ctx, closed)))
        assert set(enumerate_concepts(ctx)) == brute, case
    _report(capsys, "concept-completeness", "200 random contexts up to 8x8, set equality")


def _best_of(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_closed_form_speed_and_scaling(capsys):
    """Closed form is fast at n=10000 and pulls away from summation.

    The two methods cost a linear versus a quadratic number of
    big-integer steps in the evaluated tail length; with that length
    grown as n/8 the runtime ratio closed/summation must roughly halve
    as n doubles, so the measured trend has a wide margin over timer
    noise.
    """
    rng = random.Random(88)
    n = 10_000
    v = tuple(rng.randint(0, n) for _ in range(10))
    m = Marginals(n, v)
    started = time.perf_counter()
    tail_cdf_closed_form(m, 1)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"n=10000 closed form took {elapsed:.2f}s"

    trend = random.Random(1009)
    ratios = []
    for size in (1000, 2000, 4000, 8000):
        v = tuple(trend.randint(size // 2, 3 * size // 4) for _ in range(3))
        m = Marginals(size, v)
        i = min(v) - size // 8 + 1
        assert tail_cdf_closed_form(m, i).value == tail_pmf_summation(m, i).value
        closed = _best_of(lambda: tail_cdf_closed_form(m, i), 7)
        summed = _best_of(lambda: tail_pmf_summation(m, i), 3)
        ratios.append(closed / summed)
    assert all(a > b for a, b in zip(ratios, ratios[1:])), ratios
    _report(
        capsys,
        "performance",
        f"n=10000 in {elapsed * 1e3:.0f}ms; ratio trend "
        + " > ".join(f"{r:.4f}" for r in ratios),
    )


def test_monte_carlo_tail_agreement(capsys):
    """A seeded permutation simulation lands within 3 SE of the exact tail."""
    n, v = 100, (40, 50, 60)
    draws = 10**6
    chunk = 20_000
    rng = np.random.default_rng(271828)
    bases = [
        np.array([True] * vj + [False] * (n - vj), dtype=bool) for vj in v
    ]
    counts = np.zeros(n + 1, dtype=np.int64)
    for _ in range(draws // chunk):
        acc = np.ones((chunk, n), dtype=bool)
        for base in bases:
            arr = np.tile(base, (chunk, 1))
            rng.permuted(arr, axis=1, out=arr)
            acc &= arr
        counts += np.bincount(acc.sum(axis=1), minlength=n + 1)
    assert counts.sum() == draws

    m = Marginals(n, v)
    exact_tail = {}
    for i in range(1, min(v) + 1):
        exact_tail[i] = float(tail_cdf_closed_form(m, i).value)
    levels = []
    for q in (0.25, 0.5, 0.75, 0.9):
        candidates = [i for i, p in exact_tail.items() if p <= q]
        levels.append(min(candidates))
    checked = []
    for i in sorted(set(levels)):
        exact = exact_tail[i]
        empirical = counts[i:].sum() / draws
        tolerance = 3 * math.sqrt(exact * (1 - exact) / draws)
        assert abs(empirical - exact) <= tolerance, (i, exact, empirical, tolerance)
        checked.append(f"i={i} |{empirical - exact:+.2e}|<{tolerance:.2e}")
    _report(capsys, "monte-carlo", "; ".join(checked))
