"""Regenerate the committed csv fixtures, deterministically.

Run from the repository root:

    python data/generate_fixtures.py

The signature fixture is fully structured: 19 rows carry every feature
and the remaining ones per column are laid out as staggered arcs over
the other rows, two of which never overlap, so exactly those 19 rows
display the complete signature and the column sums land on the target
values.  The cell fixture is drawn from a seeded three-population
mixture: each population expresses its own marker combination at high
rate, so the concept lattice contains genuinely significant signatures
at mid-range extents as well as broad and rare concepts on both sides
of the 60..400 band used in the demos and tests.
"""

from __future__ import annotations

import pathlib

from cooccur import FormalContext, SplitMix64, extent, parse_path, write_path

HERE = pathlib.Path(__file__).resolve().parent

SIGNATURE_N = 510
SIGNATURE_SUMS = (101, 105, 106, 73, 69, 104)
SIGNATURE_CORE = 19

CELLS_N = 600
# marker rates per population; rows sum to weights 5:3:2 over 600 cells
CELLS_PROFILES = (
    (0.95, 0.85, 0.30, 0.20, 0.15, 0.10, 0.05, 0.05),
    (0.80, 0.40, 0.85, 0.80, 0.75, 0.20, 0.10, 0.05),
    (0.60, 0.50, 0.20, 0.15, 0.10, 0.90, 0.85, 0.80),
)
CELLS_SEED = 7


def build_signature_context() -> FormalContext:
    n = SIGNATURE_N
    k = len(SIGNATURE_SUMS)
    core = SIGNATURE_CORE
    rest = n - core
    matrix = [[0] * k for _ in range(n)]
    for s in range(core):
        for j in range(k):
            matrix[s][j] = 1
    for j, total in enumerate(SIGNATURE_SUMS):
        offset = (j * 82) % rest
        for t in range(total - core):
            matrix[core + (offset + t) % rest][j] = 1
    samples = [f"s{s + 1:03d}" for s in range(n)]
    features = [f"g{j + 1}" for j in range(k)]
    return FormalContext(samples, features, matrix)


def build_cells_context() -> FormalContext:
    rng = SplitMix64(CELLS_SEED)
    k = len(CELLS_PROFILES[0])
    thresholds = [[int(p * 2**64) for p in profile] for profile in CELLS_PROFILES]
    matrix = []
    for s in range(CELLS_N):
        # interleave populations 5:3:2 so row order carries no signal
        slot = s % 10
        population = 0 if slot < 5 else 1 if slot < 8 else 2
        row = thresholds[population]
        matrix.append([1 if rng.next_u64() < row[j] else 0 for j in range(k)])
    samples = [f"c{s + 1:03d}" for s in range(CELLS_N)]
    features = [f"m{j + 1}" for j in range(k)]
    return FormalContext(samples, features, matrix)


def build_toy_context() -> FormalContext:
    return FormalContext(
        ["s1", "s2", "s3"],
        ["f1", "f2", "f3"],
        [(1, 1, 0), (1, 1, 1), (0, 1, 1)],
    )


def main() -> None:
    signature = build_signature_context()
    assert signature.column_sums() == SIGNATURE_SUMS
    assert len(extent(signature, signature.features)) == SIGNATURE_CORE
    write_path(signature, HERE / "signature_510x6.csv")

    cells = build_cells_context()
    write_path(cells, HERE / "cells_600x8.csv")

    write_path(build_toy_context(), HERE / "toy_3x3.csv")

    for name in ("signature_510x6.csv", "cells_600x8.csv", "toy_3x3.csv"):
        ctx = parse_path(HERE / name)
        print(f"{name}: n={ctx.n} k={ctx.k} column_sums={ctx.column_sums()}")


if __name__ == "__main__":
    main()
