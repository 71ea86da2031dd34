"""Check the counting formulas against brute force, in front of you.

Everything the fast path computes can be recomputed by enumerating
binary matrices directly at small sizes.  This is the same machinery
the test suite runs; here it prints its work so you can watch the
numbers line up, including one fully spelled-out case.
"""

from cooccur import (
    Marginals,
    count_with_incidence,
    enumerate_configurations,
    histogram_incidence,
    incidence_of,
    run_verification,
    tail_cdf_closed_form,
)


def spelled_out_case() -> None:
    n, v = 4, (2, 2)
    print(f"n={n}, v={v}: {6 * 6} equally likely matrices")
    hist = histogram_incidence(n, v)
    for i in sorted(hist):
        formula = count_with_incidence(n, v, i)
        print(f"  incidence {i}: enumerated {hist[i]:>2}, formula {formula:>2}")
    tail = tail_cdf_closed_form(Marginals(n, v), 2)
    print(f"  closed-form P(I >= 2) = {tail.value} (6 of 36 matrices)")
    # show three of the six doubly-overlapping matrices
    shown = 0
    for config in enumerate_configurations(n, v):
        if incidence_of(config) == 2 and shown < 3:
            print(f"    e.g. rows {config.rows()}")
            shown += 1
    print()


def main() -> None:
    spelled_out_case()
    print("full grid up to n=4, k=2:")
    cases = run_verification(4, 2)
    for case in cases:
        status = "pass" if case.passed else "FAIL"
        print(f"  {status}  {case.check:<28} n={case.n} k={case.k}  {case.detail}")
    failed = sum(1 for case in cases if not case.passed)
    print(f"{len(cases) - failed}/{len(cases)} checks passed")


if __name__ == "__main__":
    main()
