"""Exact coincidence statistics and concept discovery for binary matrices.

Given an n-by-k 0/1 matrix with fixed column sums, the incidence
statistic counts the rows that are 1 in every column.  This package
computes its exact distribution by inclusion-exclusion, evaluates the
upper-tail test in closed form, discovers candidate feature signatures
through formal concept analysis, and exposes both over a CLI and a
small HTTP service.
"""

from .core import (
    METHOD_CLOSED_FORM,
    METHOD_PMF_SUMMATION,
    Marginals,
    TestResult,
    coincidence_test,
    count_empty_intersection,
    count_with_incidence,
    fisher_tail,
    pmf,
    support_bounds,
    tail_cdf_closed_form,
    tail_pmf_summation,
)
from .errors import (
    BudgetError,
    EnumerationCapError,
    InvalidInputError,
    MatrixParseError,
    TimeBudgetError,
)
from .exactarith import ExactProbability, binomial, scientific
from .fca import (
    Concept,
    DiscoveryFilters,
    FormalContext,
    SignatureFinding,
    close_features,
    cover_edges,
    discover,
    enumerate_concepts,
    extent,
    intent,
)
from .ingest import (
    SplitMix64,
    parse_bytes,
    parse_path,
    parse_text,
    subsample,
    to_delimited,
    write_path,
)
from .oracle import (
    Configuration,
    enumerate_configurations,
    histogram_incidence,
    incidence_of,
    lower_cdf_generating_function,
    poly_expand_f_minus_top,
    run_verification,
    verify_cdf_generating_function,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "METHOD_CLOSED_FORM",
    "METHOD_PMF_SUMMATION",
    "Marginals",
    "TestResult",
    "coincidence_test",
    "count_empty_intersection",
    "count_with_incidence",
    "fisher_tail",
    "pmf",
    "support_bounds",
    "tail_cdf_closed_form",
    "tail_pmf_summation",
    "BudgetError",
    "EnumerationCapError",
    "InvalidInputError",
    "MatrixParseError",
    "TimeBudgetError",
    "ExactProbability",
    "binomial",
    "scientific",
    "Concept",
    "DiscoveryFilters",
    "FormalContext",
    "SignatureFinding",
    "close_features",
    "cover_edges",
    "discover",
    "enumerate_concepts",
    "extent",
    "intent",
    "SplitMix64",
    "parse_bytes",
    "parse_path",
    "parse_text",
    "subsample",
    "to_delimited",
    "write_path",
    "Configuration",
    "enumerate_configurations",
    "histogram_incidence",
    "incidence_of",
    "lower_cdf_generating_function",
    "poly_expand_f_minus_top",
    "run_verification",
    "verify_cdf_generating_function",
]
