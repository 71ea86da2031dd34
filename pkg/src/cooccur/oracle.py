"""Brute-force and generating-function oracles.

Everything here re-derives the counting results of :mod:`cooccur.core` by
independent means at desk scale: explicit enumeration of all binary
matrices with prescribed column sums, and exact expansion of the
multivariate polynomials whose coefficients tabulate the same counts.
The caps are refusal thresholds, not soft limits -- a partially
enumerated oracle is worse than none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

from .core import Marginals, count_empty_intersection, count_with_incidence, tail_cdf_closed_form
from .errors import EnumerationCapError, InvalidInputError

__all__ = [
    "ENUM_MAX_N",
    "ENUM_MAX_K",
    "GENFUN_MAX_N",
    "GENFUN_MAX_K",
    "Configuration",
    "enumerate_configurations",
    "incidence_of",
    "histogram_incidence",
    "MultiPoly",
    "poly_expand_f_minus_top",
    "lower_cdf_generating_function",
    "verify_cdf_generating_function",
    "run_verification",
    "VerificationCase",
]

ENUM_MAX_N = 6
ENUM_MAX_K = 4
GENFUN_MAX_N = 5
GENFUN_MAX_K = 3


@dataclass(frozen=True)
class Configuration:
    """One explicit ``n x k`` binary matrix, stored as column supports."""

    n: int
    columns: tuple[frozenset[int], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Configuration":
        n = len(rows)
        k = len(rows[0]) if rows else 0
        cols = []
        for j in range(k):
            cols.append(frozenset(s for s in range(n) if rows[s][j]))
        return cls(n=n, columns=tuple(cols))

    def rows(self) -> list[tuple[int, ...]]:
        return [
            tuple(1 if s in col else 0 for col in self.columns)
            for s in range(self.n)
        ]

    def column_sums(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)


def incidence_of(config: Configuration) -> int:
    """Number of all-ones rows: the size of the mutual column intersection."""
    if not config.columns:
        return config.n
    inter = set(config.columns[0])
    for col in config.columns[1:]:
        inter &= col
    return len(inter)


def _check_enum_caps(n: int, k: int, max_n: int, max_k: int) -> None:
    if n > max_n:
        raise EnumerationCapError(
            f"refusing enumeration with n={n} above cap {max_n}", cap=max_n
        )
    if k > max_k:
        raise EnumerationCapError(
            f"refusing enumeration with k={k} above cap {max_k}", cap=max_k
        )


def enumerate_configurations(
    n: int, v: Sequence[int], max_n: int = ENUM_MAX_N, max_k: int = ENUM_MAX_K
) -> Iterator[Configuration]:
    """Yield every ``n x k`` binary matrix with column sums exactly ``v``.

    The stream has ``prod_j C(n, v_j)`` elements, each produced once, as
    the cartesian product of the per-column support choices.
    """
    v = tuple(v)
    if n < 0:
        raise InvalidInputError(f"sample count must be >= 0, got {n}")
    for j, vj in enumerate(v):
        if not 0 <= vj <= n:
            raise InvalidInputError(f"frequency v[{j}]={vj} outside 0..{n}")
    _check_enum_caps(n, len(v), max_n, max_k)
    per_column = [
        [frozenset(sub) for sub in combinations(range(n), vj)] for vj in v
    ]
    for cols in product(*per_column):
        yield Configuration(n=n, columns=cols)


def histogram_incidence(
    n: int, v: Sequence[int], max_n: int = ENUM_MAX_N, max_k: int = ENUM_MAX_K
) -> dict[int, int]:
    """Exact counts of configurations grouped by incidence value."""
    hist: dict[int, int] = {}
    for config in enumerate_configurations(n, v, max_n=max_n, max_k=max_k):
        i = incidence_of(config)
        hist[i] = hist.get(i, 0) + 1
    return hist


class MultiPoly:
    """Multivariate polynomial with integer coefficients, degree-capped.

    Coefficients are keyed by exponent tuples of length ``nvars``; zero
    coefficients are never stored and exponents above ``cap`` in any
    coordinate are dropped on the fly.  Only multiplicity-bounded
    coefficients are ever consulted, so the cap loses nothing while
    keeping expansions at ``(cap+1)**nvars`` entries.
    """

    def __init__(self, nvars: int, cap: int, coeffs: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 1:
            raise InvalidInputError(f"need at least one variable, got {nvars}")
        if cap < 0:
            raise InvalidInputError(f"degree cap must be >= 0, got {cap}")
        self.nvars = nvars
        self.cap = cap
        self.coeffs: dict[tuple[int, ...], int] = {}
        if coeffs:
            for expo, coef in coeffs.items():
                self._add_term(tuple(expo), coef)

    def _add_term(self, expo: tuple[int, ...], coef: int) -> None:
        if coef == 0:
            return
        if len(expo) != self.nvars:
            raise InvalidInputError(
                f"exponent tuple {expo} has wrong arity for {self.nvars} variables"
            )
        if any(e < 0 for e in expo):
            raise InvalidInputError(f"negative exponent in {expo}")
        if any(e > self.cap for e in expo):
            return
        new = self.coeffs.get(expo, 0) + coef
        if new:
            self.coeffs[expo] = new
        else:
            self.coeffs.pop(expo, None)

    @classmethod
    def constant(cls, nvars: int, cap: int, value: int) -> "MultiPoly":
        return cls(nvars, cap, {(0,) * nvars: value})

    def coefficient(self, expo: Sequence[int]) -> int:
        return self.coeffs.get(tuple(expo), 0)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = MultiPoly(self.nvars, self.cap, self.coeffs)
        for expo, coef in other.coeffs.items():
            out._add_term(expo, coef)
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = MultiPoly(self.nvars, self.cap, self.coeffs)
        for expo, coef in other.coeffs.items():
            out._add_term(expo, -coef)
        return out

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out = MultiPoly(self.nvars, self.cap)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                if any(e > self.cap for e in expo):
                    continue
                out._add_term(expo, c1 * c2)
        return out

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise InvalidInputError(f"negative power {exponent}")
        out = MultiPoly.constant(self.nvars, self.cap, 1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"MultiPoly(nvars={self.nvars}, cap={self.cap}, terms={len(self.coeffs)})"


def _check_poly_caps(n: int, k: int, max_n: int, max_k: int) -> None:
    if n > max_n:
        raise EnumerationCapError(
            f"refusing polynomial expansion with n={n} above cap {max_n}", cap=max_n
        )
    if k > max_k:
        raise EnumerationCapError(
            f"refusing polynomial expansion with k={k} above cap {max_k}", cap=max_k
        )


def _row_sum_poly(n: int, k: int) -> tuple[MultiPoly, MultiPoly]:
    """The all-rows polynomial ``prod_j (1 + t_j)`` and the all-ones
    monomial ``t_1 ... t_k``, both capped at degree ``n``."""
    cap = max(n, 1)
    f = MultiPoly.constant(k, cap, 1)
    for j in range(k):
        expo = tuple(1 if t == j else 0 for t in range(k))
        f = f * MultiPoly(k, cap, {(0,) * k: 1, expo: 1})
    top = MultiPoly(k, cap, {(1,) * k: 1})
    return f, top


def poly_expand_f_minus_top(
    n: int, k: int, max_n: int = ENUM_MAX_N, max_k: int = ENUM_MAX_K
) -> MultiPoly:
    """Exact expansion of ``(prod_j (1+t_j) - t_1...t_k)**n``.

    The coefficient at exponent vector ``v`` counts the configurations
    with column sums ``v`` and empty mutual intersection; each factor
    contributes one row drawn from all row patterns except all-ones.
    """
    if n < 0 or k < 1:
        raise InvalidInputError(f"invalid expansion size n={n}, k={k}")
    _check_poly_caps(n, k, max_n, max_k)
    f, top = _row_sum_poly(n, k)
    return (f - top) ** n


def lower_cdf_generating_function(
    n: int, k: int, i: int, max_n: int = GENFUN_MAX_N, max_k: int = GENFUN_MAX_K
) -> MultiPoly:
    """Polynomial whose coefficient at ``v`` counts configurations with
    column sums ``v`` and incidence at most ``i``:
    ``sum_{u=0..i} C(n,u) * (f - top)**(n-u) * top**u``."""
    if n < 1 or k < 1:
        raise InvalidInputError(f"invalid expansion size n={n}, k={k}")
    if not 0 <= i <= n:
        raise InvalidInputError(f"incidence bound {i} outside 0..{n}")
    _check_poly_caps(n, k, max_n, max_k)
    f, top = _row_sum_poly(n, k)
    body = f - top
    total = MultiPoly(k, max(n, 1))
    for u in range(i + 1):
        term = MultiPoly.constant(k, max(n, 1), math.comb(n, u))
        term = term * (body ** (n - u)) * (top**u)
        total = total + term
    return total


def verify_cdf_generating_function(
    n: int, k: int, i: int, max_n: int = GENFUN_MAX_N, max_k: int = GENFUN_MAX_K
) -> bool:
    """True iff the lower-tail generating function tabulates, at every
    exponent vector ``v``, the configuration count with incidence <= ``i``
    as summed from the per-incidence counting formula."""
    poly = lower_cdf_generating_function(n, k, i, max_n=max_n, max_k=max_k)
    for v in product(range(n + 1), repeat=k):
        direct = sum(count_with_incidence(n, v, u) for u in range(min(i, min(v)) + 1))
        if poly.coefficient(v) != direct:
            return False
    return True


@dataclass(frozen=True)
class VerificationCase:
    """One line of the verification report."""

    check: str
    n: int
    k: int
    detail: str
    passed: bool


def run_verification(max_n: int, max_k: int) -> list[VerificationCase]:
    """Cross-check the counting formulas against enumeration and the
    generating-function identities over the full grid up to the caps.

    Refuses caps beyond the enumeration limits.  The generating-function
    checks run on the (tighter) polynomial grid.
    """
    if not 1 <= max_n <= ENUM_MAX_N:
        raise EnumerationCapError(
            f"verification cap max_n={max_n} outside 1..{ENUM_MAX_N}", cap=ENUM_MAX_N
        )
    if not 1 <= max_k <= ENUM_MAX_K:
        raise EnumerationCapError(
            f"verification cap max_k={max_k} outside 1..{ENUM_MAX_K}", cap=ENUM_MAX_K
        )
    cases: list[VerificationCase] = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            ok_empty = True
            ok_exact = True
            ok_tail = True
            grids = 0
            for v in product(range(n + 1), repeat=k):
                grids += 1
                hist = histogram_incidence(n, v)
                if hist.get(0, 0) != count_empty_intersection(n, v):
                    ok_empty = False
                for i in range(n + 1):
                    if hist.get(i, 0) != count_with_incidence(n, v, i):
                        ok_exact = False
                total = sum(hist.values())
                marg = Marginals(n, v)
                for i in range(1, n + 1):
                    enum_tail = Fraction(
                        sum(cnt for iv, cnt in hist.items() if iv >= i), total
                    )
                    if tail_cdf_closed_form(marg, i).value != enum_tail:
                        ok_tail = False
            detail = f"{grids} marginal vectors"
            cases.append(VerificationCase("empty-intersection-count", n, k, detail, ok_empty))
            cases.append(VerificationCase("exact-incidence-count", n, k, detail, ok_exact))
            cases.append(VerificationCase("closed-form-tail", n, k, detail, ok_tail))
            if n <= GENFUN_MAX_N and k <= GENFUN_MAX_K:
                ok_gen = all(
                    verify_cdf_generating_function(n, k, i) for i in range(n + 1)
                )
                cases.append(
                    VerificationCase(
                        "cdf-generating-function", n, k, f"i=0..{n}", ok_gen
                    )
                )
    return cases
