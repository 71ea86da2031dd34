"""Reading, writing, and subsampling binary matrix files.

The accepted layout is deliberately narrow: a delimited text table,
first row ``corner,feature...`` and each following row
``sample,cell...`` with every cell exactly ``0`` or ``1`` after
surrounding whitespace is removed.  Anything else is rejected with the
offending coordinates rather than coerced, because silent coercion is
how two runs of the same analysis stop agreeing.

Subsampling uses an explicitly specified generator (splitmix64) instead
of a language-default PRNG so that a seed means the same row subset in
any port of this tool.  Test vectors are frozen in the test suite.
"""

from __future__ import annotations

import csv
import io
import os
from typing import Iterable, Sequence

from .errors import BudgetError, InvalidInputError, MatrixParseError
from .fca import FormalContext

__all__ = [
    "FORMAT_CSV",
    "FORMAT_TSV",
    "DEFAULT_MAX_CELLS",
    "SplitMix64",
    "parse_text",
    "parse_bytes",
    "parse_path",
    "to_delimited",
    "write_path",
    "subsample",
]

FORMAT_CSV = "csv"
FORMAT_TSV = "tsv"
_DELIMITERS = {FORMAT_CSV: ",", FORMAT_TSV: "\t"}

DEFAULT_MAX_CELLS = 10**6

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 sequence generator.

    64-bit state advanced by the golden-gamma constant, output scrambled
    by two xor-shift multiplies.  Chosen for its published reference
    outputs: any implementation, in any language, seeded with 0 must
    produce e220a8397b1dcdaf, 6e789e6aa1b965f4, ... which the test suite
    pins.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from ``range(bound)`` by rejection, no modulo bias."""
        if bound < 1:
            raise InvalidInputError(f"draw bound must be >= 1, got {bound}")
        # largest multiple of bound below 2^64; draws past it are retried
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def _delimiter(fmt: str) -> str:
    try:
        return _DELIMITERS[fmt]
    except KeyError:
        raise InvalidInputError(
            f"unknown format {fmt!r}, expected one of {sorted(_DELIMITERS)}"
        ) from None


def parse_text(
    text: str, fmt: str = FORMAT_CSV, max_cells: int = DEFAULT_MAX_CELLS
) -> FormalContext:
    """Parse delimited text into a context.

    Raises :class:`MatrixParseError` with row/column coordinates on the
    first offending cell, and :class:`BudgetError` when the declared
    table would exceed ``max_cells`` cells.
    """
    delimiter = _delimiter(fmt)
    reader = csv.reader(io.StringIO(text, newline=""), delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise MatrixParseError("empty file: expected a header row") from None
    if len(header) < 2:
        raise MatrixParseError(
            "header must name at least one feature after the corner label"
        )
    features = header[1:]
    k = len(features)
    if k > max_cells:
        raise BudgetError(
            f"{k} features alone exceed the {max_cells}-cell cap", cap=max_cells
        )
    samples: list[str] = []
    matrix: list[list[int]] = []
    for record in reader:
        if not record or (len(record) == 1 and record[0] == ""):
            continue  # blank line, e.g. trailing newline
        sample = record[0]
        if len(record) != k + 1:
            raise MatrixParseError(
                f"row {sample!r} has {len(record) - 1} cells, expected {k}",
                row=sample,
            )
        row = []
        for j, raw in enumerate(record[1:]):
            token = raw.strip()
            if token == "0":
                row.append(0)
            elif token == "1":
                row.append(1)
            else:
                raise MatrixParseError(
                    f"cell ({sample!r}, {features[j]!r}) is {raw!r}, expected 0 or 1",
                    row=sample,
                    column=features[j],
                )
        samples.append(sample)
        matrix.append(row)
        if len(samples) * k > max_cells:
            raise BudgetError(
                f"matrix exceeds the {max_cells}-cell cap", cap=max_cells
            )
    if not samples:
        raise MatrixParseError("no sample rows after the header")
    return FormalContext(samples, features, matrix)


def parse_bytes(
    data: bytes, fmt: str = FORMAT_CSV, max_cells: int = DEFAULT_MAX_CELLS
) -> FormalContext:
    """Decode UTF-8 (byte-order mark tolerated) and parse."""
    if len(data) > max_cells * 4:
        # cheap pre-check; a cell costs at least a character plus delimiter
        raise BudgetError(
            f"input of {len(data)} bytes exceeds the {max_cells}-cell cap",
            cap=max_cells,
        )
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise MatrixParseError(f"input is not valid UTF-8: {exc}") from None
    return parse_text(text, fmt=fmt, max_cells=max_cells)


def _infer_format(path: str | os.PathLike) -> str:
    return FORMAT_TSV if str(path).lower().endswith(".tsv") else FORMAT_CSV


def parse_path(
    path: str | os.PathLike,
    fmt: str | None = None,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> FormalContext:
    """Parse a file, inferring tsv from the suffix unless told otherwise."""
    if fmt is None:
        fmt = _infer_format(path)
    with open(path, "rb") as handle:
        return parse_bytes(handle.read(), fmt=fmt, max_cells=max_cells)


def to_delimited(ctx: FormalContext, fmt: str = FORMAT_CSV, corner: str = "id") -> str:
    """Serialize a context; ``parse_text`` of the result is the identity."""
    delimiter = _delimiter(fmt)
    out = io.StringIO()
    writer = csv.writer(out, delimiter=delimiter, lineterminator="\n")
    writer.writerow([corner, *ctx.features])
    for sample, row in zip(ctx.samples, ctx.matrix_rows()):
        writer.writerow([sample, *map(str, row)])
    return out.getvalue()


def write_path(ctx: FormalContext, path: str | os.PathLike, fmt: str | None = None) -> None:
    if fmt is None:
        fmt = _infer_format(path)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(to_delimited(ctx, fmt=fmt))


def subsample(ctx: FormalContext, rows: int, seed: int) -> FormalContext:
    """Uniform random subset of ``rows`` samples, original order kept.

    Deterministic for a given seed.  ``rows`` equal to the sample count
    returns a context identical to the input.
    """
    if not 1 <= rows <= ctx.n:
        raise InvalidInputError(
            f"subsample size {rows} outside 1..{ctx.n}"
        )
    rng = SplitMix64(seed)
    indices = list(range(ctx.n))
    # partial Fisher-Yates: after `rows` swaps the prefix is a uniform subset
    for t in range(rows):
        u = t + rng.below(ctx.n - t)
        indices[t], indices[u] = indices[u], indices[t]
    chosen = sorted(indices[:rows])
    full = ctx.matrix_rows()
    return FormalContext(
        [ctx.samples[s] for s in chosen],
        ctx.features,
        [full[s] for s in chosen],
    )
