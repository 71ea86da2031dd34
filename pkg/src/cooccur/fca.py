"""Formal concept analysis over binary sample-by-feature tables.

A :class:`FormalContext` relates samples to the features they display.
The derivation operators :func:`extent` and :func:`intent` form a Galois
correspondence whose closed feature sets are exactly the concept
intents; :func:`enumerate_concepts` materializes all of them by closing
pairwise unions until a fixpoint, and :func:`discover` scores each
concept's extent size against the fixed-marginals null model.

Feature and sample subsets cross the public boundary as frozensets of
identifier strings; internally both sides live as bitmasks keyed to the
context's declared ordering, so derivations cost one AND per word.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Marginals, TestResult, coincidence_test
from .errors import EnumerationCapError, InvalidInputError, TimeBudgetError

__all__ = [
    "DEFAULT_MAX_CONCEPTS",
    "FormalContext",
    "Concept",
    "SignatureFinding",
    "DiscoveryFilters",
    "extent",
    "intent",
    "close_features",
    "enumerate_concepts",
    "discover",
    "cover_edges",
]

DEFAULT_MAX_CONCEPTS = 10**6


class FormalContext:
    """Immutable binary incidence table between samples and features.

    ``matrix[s][j]`` is 1 when sample ``s`` displays feature ``j``.  Rows
    and columns are mirrored as bitmasks (``rows[s]`` over feature
    positions, ``columns[j]`` over sample positions) at construction.
    """

    __slots__ = ("samples", "features", "rows", "columns", "_sample_pos", "_feature_pos")

    def __init__(
        self,
        samples: Sequence[str],
        features: Sequence[str],
        matrix: Sequence[Sequence[int]],
    ):
        samples = tuple(samples)
        features = tuple(features)
        if not samples or not features:
            raise InvalidInputError("context needs at least one sample and one feature")
        for kind, names in (("sample", samples), ("feature", features)):
            seen: set[str] = set()
            for name in names:
                if name in seen:
                    raise InvalidInputError(f"duplicate {kind} identifier {name!r}")
                seen.add(name)
        if len(matrix) != len(samples):
            raise InvalidInputError(
                f"matrix has {len(matrix)} rows for {len(samples)} samples"
            )
        rows = []
        for s, row in enumerate(matrix):
            if len(row) != len(features):
                raise InvalidInputError(
                    f"row {samples[s]!r} has {len(row)} cells for {len(features)} features"
                )
            mask = 0
            for j, cell in enumerate(row):
                if cell not in (0, 1):
                    raise InvalidInputError(
                        f"cell ({samples[s]!r}, {features[j]!r}) is {cell!r}, expected 0 or 1"
                    )
                if cell:
                    mask |= 1 << j
            rows.append(mask)
        self.samples = samples
        self.features = features
        self.rows = tuple(rows)
        columns = []
        for j in range(len(features)):
            cmask = 0
            for s, rmask in enumerate(rows):
                if rmask >> j & 1:
                    cmask |= 1 << s
            columns.append(cmask)
        self.columns = tuple(columns)
        self._sample_pos = {name: s for s, name in enumerate(samples)}
        self._feature_pos = {name: j for j, name in enumerate(features)}

    @property
    def n(self) -> int:
        return len(self.samples)

    @property
    def k(self) -> int:
        return len(self.features)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.columns)

    def feature_position(self, name: str) -> int:
        try:
            return self._feature_pos[name]
        except KeyError:
            raise InvalidInputError(f"unknown feature {name!r}") from None

    def sample_position(self, name: str) -> int:
        try:
            return self._sample_pos[name]
        except KeyError:
            raise InvalidInputError(f"unknown sample {name!r}") from None

    def matrix_rows(self) -> list[tuple[int, ...]]:
        """Rows as 0/1 tuples in declared order."""
        return [
            tuple(mask >> j & 1 for j in range(self.k)) for mask in self.rows
        ]

    def feature_mask(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.feature_position(name)
        return mask

    def sample_mask(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.sample_position(name)
        return mask

    def feature_names(self, mask: int) -> frozenset[str]:
        return frozenset(self.features[j] for j in _bit_positions(mask))

    def sample_names(self, mask: int) -> frozenset[str]:
        return frozenset(self.samples[s] for s in _bit_positions(mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.samples == other.samples
            and self.features == other.features
            and self.rows == other.rows
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"FormalContext(n={self.n}, k={self.k})"


def _bit_positions(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _extent_mask(ctx: FormalContext, feature_mask: int) -> int:
    out = (1 << ctx.n) - 1
    for j in _bit_positions(feature_mask):
        out &= ctx.columns[j]
    return out


def _intent_mask(ctx: FormalContext, sample_mask: int) -> int:
    out = (1 << ctx.k) - 1
    for s in _bit_positions(sample_mask):
        out &= ctx.rows[s]
    return out


def extent(ctx: FormalContext, features: Iterable[str]) -> frozenset[str]:
    """Samples displaying every one of the given features.

    The empty feature set imposes no constraint and yields all samples.
    """
    return ctx.sample_names(_extent_mask(ctx, ctx.feature_mask(features)))


def intent(ctx: FormalContext, samples: Iterable[str]) -> frozenset[str]:
    """Features shared by every one of the given samples."""
    return ctx.feature_names(_intent_mask(ctx, ctx.sample_mask(samples)))


def close_features(ctx: FormalContext, features: Iterable[str]) -> frozenset[str]:
    """The closure ``intent(extent(F))``: extensive, monotone, idempotent."""
    fmask = ctx.feature_mask(features)
    return ctx.feature_names(_intent_mask(ctx, _extent_mask(ctx, fmask)))


@dataclass(frozen=True)
class Concept:
    """A maximal all-ones bicluster.

    Every sample of the extent displays every feature of the intent, no
    further feature is shared by the whole extent, and no further sample
    displays the whole intent.
    """

    intent: frozenset[str]
    extent: frozenset[str]


def enumerate_concepts(
    ctx: FormalContext,
    max_concepts: int = DEFAULT_MAX_CONCEPTS,
    deadline: float | None = None,
) -> list[Concept]:
    """All concepts of the context, as a list in canonical intent order.

    Starts from the closure of the empty feature set plus each singleton
    closure, then repeatedly closes unions of pairs of known intents
    until nothing new appears.  Every closed set is the fold of its
    members' singleton closures, so the fixpoint is complete.

    Raises :class:`EnumerationCapError` beyond ``max_concepts`` and
    :class:`TimeBudgetError` past ``deadline`` (a ``time.monotonic``
    instant).
    """
    if max_concepts < 1:
        raise InvalidInputError(f"concept cap must be >= 1, got {max_concepts}")
    found: dict[int, int] = {}
    pending: list[int] = []

    def check_budgets() -> None:
        if len(found) > max_concepts:
            raise EnumerationCapError(
                f"more than {max_concepts} concepts; tighten the context or raise the cap",
                cap=max_concepts,
            )
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetError("concept enumeration exceeded its time budget")

    def add_closure(fmask: int) -> None:
        emask = _extent_mask(ctx, fmask)
        imask = _intent_mask(ctx, emask)
        if imask not in found:
            found[imask] = emask
            pending.append(imask)
            check_budgets()

    add_closure(0)
    for j in range(ctx.k):
        add_closure(1 << j)
    while pending:
        current = pending.pop()
        for other in list(found):
            union = current | other
            if union not in found:
                add_closure(union)
        check_budgets()
    ordered = sorted(found, key=lambda imask: (imask.bit_count(), _intent_key(ctx, imask)))
    return [
        Concept(intent=ctx.feature_names(imask), extent=ctx.sample_names(found[imask]))
        for imask in ordered
    ]


def _intent_key(ctx: FormalContext, imask: int) -> tuple[int, ...]:
    return tuple(_bit_positions(imask))


@dataclass(frozen=True)
class DiscoveryFilters:
    """Selection bounds for scored concepts.

    ``min_extent``/``max_extent`` bound the number of supporting
    samples, ``max_intent_size`` bounds the signature width, and
    ``p_threshold`` keeps only findings at least that significant.
    ``None`` bounds default to the loosest admissible value.
    """

    min_extent: int = 1
    max_extent: int | None = None
    max_intent_size: int | None = None
    p_threshold: Fraction | float = 1

    def __post_init__(self):
        if self.min_extent < 0:
            raise InvalidInputError(f"min_extent must be >= 0, got {self.min_extent}")
        if self.max_extent is not None and self.max_extent < self.min_extent:
            raise InvalidInputError(
                f"max_extent {self.max_extent} below min_extent {self.min_extent}"
            )
        if self.max_intent_size is not None and self.max_intent_size < 1:
            raise InvalidInputError(
                f"max_intent_size must be >= 1, got {self.max_intent_size}"
            )
        if not 0 <= self.p_threshold <= 1:
            raise InvalidInputError(
                f"p_threshold must lie in [0, 1], got {self.p_threshold}"
            )


@dataclass(frozen=True)
class SignatureFinding:
    """A concept scored against the fixed-marginals null model.

    ``marginals`` restricts the context's column sums to the intent and
    the observed incidence is the extent size, so ``result.p_value`` is
    the exact upper-tail probability of a coincidence at least this
    strong.
    """

    concept: Concept
    marginals: Marginals
    result: TestResult

    @property
    def observed(self) -> int:
        return len(self.concept.extent)

    @property
    def p_value(self):
        return self.result.p_value


def discover(
    ctx: FormalContext,
    filters: DiscoveryFilters | None = None,
    max_concepts: int = DEFAULT_MAX_CONCEPTS,
    deadline: float | None = None,
) -> list[SignatureFinding]:
    """Scored concepts passing the filters, most significant first.

    Only concepts with a non-empty intent are scored; a p-value over
    zero features is meaningless.  Ties on the p-value are broken by
    larger extent, then by intent position order, so output is fully
    deterministic.
    """
    if filters is None:
        filters = DiscoveryFilters()
    concepts = enumerate_concepts(ctx, max_concepts=max_concepts, deadline=deadline)
    sums = ctx.column_sums()
    max_extent = ctx.n if filters.max_extent is None else filters.max_extent
    max_intent = ctx.k if filters.max_intent_size is None else filters.max_intent_size
    findings = []
    for concept in concepts:
        if not concept.intent:
            continue
        if not filters.min_extent <= len(concept.extent) <= max_extent:
            continue
        if len(concept.intent) > max_intent:
            continue
        positions = sorted(ctx.feature_position(f) for f in concept.intent)
        marginals = Marginals(ctx.n, tuple(sums[j] for j in positions))
        result = coincidence_test(marginals, len(concept.extent))
        if result.p_value.value > filters.p_threshold:
            continue
        findings.append((result.p_value.value, -len(concept.extent), tuple(positions),
                         SignatureFinding(concept, marginals, result)))
    findings.sort(key=lambda item: item[:3])
    return [item[3] for item in findings]


def cover_edges(concepts: Sequence[Concept]) -> list[tuple[int, int]]:
    """Covering pairs of the intent-inclusion order among the given concepts.

    An edge ``(a, b)`` means concept ``a``'s intent is strictly contained
    in concept ``b``'s with no listed concept properly between them; ``a``
    is the more general node.  Indices refer to positions in the input.
    """
    edges = []
    for a, ca in enumerate(concepts):
        for b, cb in enumerate(concepts):
            if a == b or not ca.intent < cb.intent:
                continue
            direct = True
            for cc in concepts:
                if ca.intent < cc.intent < cb.intent:
                    direct = False
                    break
            if direct:
                edges.append((a, b))
    return edges
