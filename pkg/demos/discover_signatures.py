"""Mine a matrix for feature signatures and rank them by significance.

Every maximal block of samples sharing a feature set is a candidate
signature; each one is scored with the exact tail probability of its
support under fixed marginals.  The cell fixture mixes three seeded
populations, each expressing its own marker combination, so the
extent band and significance threshold should strip the list down to
the planted co-expression patterns.
"""

import pathlib

from cooccur import DiscoveryFilters, discover, extent, parse_path

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def describe(ctx, findings, limit=8) -> None:
    for finding in findings[:limit]:
        intent = ",".join(sorted(finding.concept.intent, key=ctx.feature_position))
        print(
            f"  p={finding.p_value.decimal(2):>9}  "
            f"extent={finding.observed:>3}  {intent}"
        )
    if len(findings) > limit:
        print(f"  ... and {len(findings) - limit} more")


def main() -> None:
    print("== structured fixture: one planted signature ==")
    ctx = parse_path(DATA / "signature_510x6.csv")
    print(f"{ctx.n} samples, {ctx.k} features, column sums {ctx.column_sums()}")
    core = extent(ctx, ctx.features)
    print(f"samples showing the full signature: {len(core)}")
    findings = discover(ctx, DiscoveryFilters(p_threshold=0.001))
    print(f"findings at p <= 0.001: {len(findings)}")
    describe(ctx, findings)
    print()

    print("== mixture fixture: filters do the work ==")
    cells = parse_path(DATA / "cells_600x8.csv")
    print(f"{cells.n} samples, {cells.k} features")
    unfiltered = discover(cells)
    print(f"all scored concepts: {len(unfiltered)}")
    banded = discover(cells, DiscoveryFilters(min_extent=60, max_extent=400))
    print(f"with extent restricted to 60..400: {len(banded)}")
    strict = discover(
        cells,
        DiscoveryFilters(min_extent=60, max_extent=400, p_threshold=0.01),
    )
    print(f"... and p <= 0.01: {len(strict)}")
    describe(cells, strict)


if __name__ == "__main__":
    main()
