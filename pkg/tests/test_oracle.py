import math
from itertools import product

import pytest

from cooccur.core import count_empty_intersection, count_with_incidence
from cooccur.errors import EnumerationCapError, InvalidInputError
from cooccur.oracle import (
    ENUM_MAX_K,
    ENUM_MAX_N,
    Configuration,
    MultiPoly,
    enumerate_configurations,
    histogram_incidence,
    incidence_of,
    lower_cdf_generating_function,
    poly_expand_f_minus_top,
    run_verification,
    verify_cdf_generating_function,
)


class TestConfiguration:
    def test_from_rows_round_trip(self):
        rows = [(1, 0), (0, 1), (1, 1)]
        config = Configuration.from_rows(rows)
        assert config.rows() == rows
        assert config.column_sums() == (2, 2)

    def test_incidence_counts_all_ones_rows(self):
        config = Configuration.from_rows([(1, 1), (1, 0), (1, 1)])
        assert incidence_of(config) == 2

    def test_incidence_no_features_counts_every_row(self):
        # the empty conjunction holds for every sample
        config = Configuration(n=3, columns=())
        assert incidence_of(config) == 3


class TestEnumeration:
    def test_stream_size_is_product_of_binomials(self):
        configs = list(enumerate_configurations(4, (2, 3)))
        assert len(configs) == math.comb(4, 2) * math.comb(4, 3)
        assert len(set(c.columns for c in configs)) == len(configs)

    def test_every_configuration_has_requested_sums(self):
        for config in enumerate_configurations(5, (2, 0, 4)):
            assert config.column_sums() == (2, 0, 4)

    def test_caps_are_refusals(self):
        with pytest.raises(EnumerationCapError):
            list(enumerate_configurations(ENUM_MAX_N + 1, (1,)))
        with pytest.raises(EnumerationCapError):
            list(enumerate_configurations(2, (1,) * (ENUM_MAX_K + 1)))

    def test_cap_override(self):
        configs = list(enumerate_configurations(7, (1,), max_n=7))
        assert len(configs) == 7

    def test_invalid_marginals(self):
        with pytest.raises(InvalidInputError):
            list(enumerate_configurations(3, (4,)))


class TestHistogram:
    def test_hand_counted_4x2(self):
        assert histogram_incidence(4, (2, 2)) == {0: 6, 1: 24, 2: 6}

    def test_matches_formula_spot_checks(self):
        for n, v in [(4, (2, 3)), (5, (2, 2, 3)), (3, (1, 1)), (6, (3, 3))]:
            hist = histogram_incidence(n, v)
            assert hist.get(0, 0) == count_empty_intersection(n, v)
            for i in range(n + 1):
                assert hist.get(i, 0) == count_with_incidence(n, v, i), (n, v, i)


class TestMultiPoly:
    def test_binomial_expansion(self):
        one_plus_t = MultiPoly(1, 10, {(0,): 1, (1,): 1})
        fifth = one_plus_t**5
        for e in range(6):
            assert fifth.coefficient((e,)) == math.comb(5, e)

    def test_cap_drops_high_degrees(self):
        t = MultiPoly(1, 2, {(1,): 1})
        cubed = t**3
        assert cubed.coeffs == {}

    def test_product_of_disjoint_variables(self):
        x = MultiPoly(2, 4, {(1, 0): 2})
        y = MultiPoly(2, 4, {(0, 1): 3})
        assert (x * y).coefficient((1, 1)) == 6

    def test_subtraction_cancels(self):
        x = MultiPoly(1, 4, {(2,): 5})
        assert (x - x).coeffs == {}

    def test_zero_coefficients_never_stored(self):
        p = MultiPoly(1, 4, {(0,): 0, (1,): 2})
        assert (0,) not in p.coeffs

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            MultiPoly(0, 4)
        with pytest.raises(InvalidInputError):
            MultiPoly(1, 4, {(-1,): 1})
        with pytest.raises(InvalidInputError):
            MultiPoly(1, 4, {(1, 2): 1})


class TestGeneratingFunctions:
    def test_coefficients_count_disjoint_configurations(self):
        """[t^v] (prod(1+t_j) - t_1..t_k)^n equals the direct count."""
        for n, k in [(2, 2), (3, 2), (4, 2), (3, 3)]:
            poly = poly_expand_f_minus_top(n, k)
            for v in product(range(n + 1), repeat=k):
                assert poly.coefficient(v) == count_empty_intersection(n, v), (n, v)

    def test_lower_cdf_polynomial_full_mass_at_top(self):
        # i = n: every configuration is counted, coefficient is a plain product
        poly = lower_cdf_generating_function(4, 2, 4)
        for v in product(range(5), repeat=2):
            assert poly.coefficient(v) == math.comb(4, v[0]) * math.comb(4, v[1])

    def test_verify_on_small_grid(self):
        for n in range(1, 5):
            for i in range(n + 1):
                assert verify_cdf_generating_function(n, 2, i)

    def test_caps(self):
        with pytest.raises(EnumerationCapError):
            poly_expand_f_minus_top(ENUM_MAX_N + 1, 2)
        with pytest.raises(EnumerationCapError):
            lower_cdf_generating_function(6, 2, 1)


class TestRunVerification:
    def test_all_pass_on_small_grid(self):
        cases = run_verification(3, 2)
        assert cases
        assert all(case.passed for case in cases)
        checks = {case.check for case in cases}
        assert "empty-intersection-count" in checks
        assert "closed-form-tail" in checks
        assert "cdf-generating-function" in checks

    def test_cap_refusal(self):
        with pytest.raises(EnumerationCapError):
            run_verification(99, 2)
        with pytest.raises(EnumerationCapError):
            run_verification(3, 9)
