"""Shared serialization for CLI and HTTP outputs.

Both front ends render results through the functions here, so identical
inputs produce byte-identical reports.  JSON is emitted with sorted
keys and no whitespace; probabilities carry a truncated scientific
decimal for display alongside the exact numerator and denominator as
decimal strings, because the exact rational is the result and the
decimal is only a view of it.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from typing import Sequence

from .core import Marginals, TestResult, pmf, support_bounds
from .errors import TimeBudgetError
from .exactarith import ExactProbability, int_str
from .fca import FormalContext, SignatureFinding, cover_edges

__all__ = [
    "probability_json",
    "test_result_json",
    "finding_json",
    "findings_json",
    "findings_edges",
    "distribution_json",
    "render_json",
    "render_test_text",
    "render_findings_text",
]


def probability_json(p: ExactProbability, digits: int = 2) -> dict:
    """Display decimal, log10, and exact ratio for one probability.

    ``log10`` is null for an exactly zero probability; JSON has no
    -Infinity.
    """
    log10 = p.log10()
    return {
        "decimal": p.decimal(digits),
        "log10": None if p.value == 0 else log10,
        "num": int_str(p.numerator),
        "den": int_str(p.denominator),
    }


def test_result_json(result: TestResult, digits: int = 2) -> dict:
    return {
        "n": result.marginals.n,
        "v": list(result.marginals.v),
        "observed": result.observed,
        "method": result.method,
        "p_value": probability_json(result.p_value, digits),
        "pmf_at_observed": probability_json(result.pmf_at_observed, digits),
    }


def finding_json(
    ctx: FormalContext, finding: SignatureFinding, rank: int, digits: int = 2
) -> dict:
    """One scored concept; ``id`` is its rank in the full ordering."""
    positions = sorted(ctx.feature_position(f) for f in finding.concept.intent)
    return {
        "id": rank,
        "intent": [ctx.features[j] for j in positions],
        "extent_size": len(finding.concept.extent),
        "n": finding.marginals.n,
        "v": list(finding.marginals.v),
        "observed": finding.observed,
        "p_value": probability_json(finding.p_value, digits),
    }


def findings_json(
    ctx: FormalContext,
    findings: Sequence[SignatureFinding],
    digits: int = 2,
    start: int = 0,
) -> list[dict]:
    return [
        finding_json(ctx, finding, start + pos, digits)
        for pos, finding in enumerate(findings)
    ]


def findings_edges(
    findings: Sequence[SignatureFinding], ids: Sequence[int]
) -> list[list[int]]:
    """Cover edges among the given findings, endpoints as their ids."""
    concepts = [f.concept for f in findings]
    return [[ids[a], ids[b]] for a, b in cover_edges(concepts)]


def distribution_json(
    m: Marginals,
    digits: int = 2,
    points: int | None = None,
    deadline: float | None = None,
) -> dict:
    """PMF and upper-tail series over the exact support.

    ``points`` caps the series length; when set below the support size,
    evenly spaced incidence values are kept, always including both
    endpoints.  Tails are exact regardless: they are suffix sums over
    the full support, computed before thinning.
    """
    lo, hi = support_bounds(m)
    masses = []
    for i in range(lo, hi + 1):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetError("distribution series exceeded its time budget")
        masses.append(pmf(m, i))
    tails_reversed = []
    running = Fraction(0)
    for mass in reversed(masses):
        running += mass.value
        tails_reversed.append(ExactProbability(running))
    tails = list(reversed(tails_reversed))
    count = hi - lo + 1
    if points is None or points >= count:
        keep = range(count)
    elif points == 1:
        keep = [0]
    else:
        keep = sorted({round(t * (count - 1) / (points - 1)) for t in range(points)})
    series = [
        {
            "i": lo + pos,
            "pmf": probability_json(masses[pos], digits),
            "tail": probability_json(tails[pos], digits),
        }
        for pos in keep
    ]
    return {
        "n": m.n,
        "v": list(m.v),
        "support": [lo, hi],
        "series": series,
    }


def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def render_test_text(result: TestResult, digits: int = 2) -> str:
    lines = [
        f"n = {result.marginals.n}",
        f"v = {','.join(str(x) for x in result.marginals.v)}",
        f"p(I >= {result.observed}) = {result.p_value.decimal(digits)}",
        f"pmf({result.observed}) = {result.pmf_at_observed.decimal(digits)}",
        f"method = {result.method}",
    ]
    return "\n".join(lines)


def render_findings_text(
    ctx: FormalContext, findings: Sequence[SignatureFinding], digits: int = 2
) -> str:
    if not findings:
        return "no findings passed the filters"
    lines = []
    for rank, finding in enumerate(findings):
        entry = finding_json(ctx, finding, rank, digits)
        lines.append(
            f"[{rank}] p={entry['p_value']['decimal']} "
            f"extent={entry['extent_size']} "
            f"intent={','.join(entry['intent'])}"
        )
    return "\n".join(lines)
