import pytest

from ncmatch.corners import (
    chain_counts,
    coefficient_product_forms_agree,
    condensed_table,
    corner_coefficients,
    coupled_series,
    dominant_eigenvalue,
    extract_band,
)
from ncmatch.geometry import Parity, make_rchain, make_zigzag
from ncmatch.oracle import MatchKind, census, census_corner_split

CONDENSED_FIXTURES = {
    1: ((1, 1), (2, 2)),
    2: ((3, 3), (7, 6)),
    3: ((10, 9), (21, 19)),
    4: ((31, 28), (66, 59)),
    5: ((97, 87), (204, 184)),
    6: ((301, 271), (632, 572)),
    7: ((933, 843), (1952, 1776)),
    8: ((2885, 2619), (6022, 5504)),
}

RATE_FIXTURES = {
    1: 3.0000,
    2: 3.0532,
    3: 3.0711,
    4: 3.0819,
    5: 3.0877,
    6: 3.0909,
    7: 3.0925,
    8: 3.0930,
    9: 3.0929,
}


class TestCoefficients:
    @pytest.mark.parametrize("r", range(1, 21))
    def test_product_and_difference_forms_agree(self, r):
        assert coefficient_product_forms_agree(r)

    def test_small_values(self):
        cc = corner_coefficients(2)
        assert cc.no_corner == (1, 1)
        assert cc.left_in == (1, 0)
        assert cc.right_in == (2, 1)
        assert cc.both_in == (1, 1)

    def test_right_in_splits_into_no_corner_plus_left_in(self):
        # the corner point is either unmatched or matched, entrywise; this
        # identity is what makes the weighted drift vanish for every r
        for r in range(1, 15):
            cc = corner_coefficients(r)
            for a in range(r):
                assert cc.right_in[a] == cc.no_corner[a] + cc.left_in[a]


class TestCoupledRecursion:
    def test_first_plain_count_is_arc_count(self):
        # one arc of three points: three down-free matchings
        assert chain_counts(2, 1) == [1, 3]

    def test_two_chain_counts_match_zigzag_chain(self):
        counts = chain_counts(2, 6)
        for k in range(1, 6):
            ps = make_zigzag(2 * k + 1, Parity.EVEN)
            assert census(ps, MatchKind.DOWN_FREE).total == counts[k]

    @pytest.mark.parametrize("r,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1)])
    def test_state_split_matches_oracle(self, r, k):
        ps = make_rchain(r, k, corners=True)
        with_mark, without = census_corner_split(ps)
        want_c, want_f = coupled_series(r, k)[k]
        assert with_mark == want_c
        assert without == want_f

    def test_states_stay_nonnegative_with_bounded_support(self):
        for r in (2, 3, 5):
            for k, (c, f) in enumerate(coupled_series(r, 5)):
                assert len(c) <= r * k + 1 and len(f) <= r * k + 1
                assert all(v >= 0 for v in c) and all(v >= 0 for v in f)


class TestBandExtraction:
    @pytest.mark.parametrize("r", sorted(CONDENSED_FIXTURES))
    def test_condensed_fixtures(self, r):
        assert extract_band(r).condensed == CONDENSED_FIXTURES[r]

    def test_jump_matrix_for_eight(self):
        assert extract_band(8).jumps == ((-2619, 0), (-2619, 2619))

    def test_positivity_hypothesis_by_r(self):
        # the smallest parameters leave a structural zero at offset +1
        assert not extract_band(1).positive_core
        assert not extract_band(2).positive_core
        for r in range(3, 10):
            assert extract_band(r).positive_core

    @pytest.mark.parametrize("r", [2, 3, 5, 8])
    def test_probe_position_invariance(self, r):
        a = extract_band(r, probe=2 * r)
        b = extract_band(r, probe=3 * r + 1)
        assert a == b

    def test_recomputed_ninth_entry(self):
        # the bottom-right condensed entry for r = 9 recomputes to 17030
        assert extract_band(9).condensed == ((8907, 8123), (18550, 17030))

    def test_cross_band_sum_is_previous_growth_factor(self):
        from ncmatch.chains import growth_factor

        for r in range(2, 12):
            sysr = extract_band(r)
            assert sysr.condensed[0][1] == growth_factor(r - 1)

    def test_drift_pattern_is_structural(self):
        for r in range(1, 12):
            sysr = extract_band(r)
            t = sysr.condensed[0][1]
            assert sysr.jumps == ((-t, 0), (-t, t))


class TestCondensedTable:
    def test_rates(self):
        table = condensed_table(9)
        for r, condensed, rate in table:
            assert rate == pytest.approx(RATE_FIXTURES[r], abs=5e-5)
            if r in CONDENSED_FIXTURES:
                assert condensed == CONDENSED_FIXTURES[r]

    def test_eight_is_the_best_up_to_twenty(self):
        table = condensed_table(20)
        best = max(table, key=lambda row: row[2])
        assert best[0] == 8

    def test_dominant_eigenvalue_fixture(self):
        from ncmatch.quadfield import QuadNumber

        m = dominant_eigenvalue(CONDENSED_FIXTURES[8])
        assert m == QuadNumber(8389, 1, 2, 69945633)
        assert m.root_float(8) == pytest.approx(3.093005695, abs=1e-9)

    def test_single_arc_eigenvalue_is_three(self):
        m = dominant_eigenvalue(CONDENSED_FIXTURES[1])
        assert m.as_fraction() == 3
