from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dubois.dataset import InvalidDataset, make_dataset
from dubois.metrics import (
    DEFAULT_BINS,
    HIGH_H_SPREAD,
    LOW_ENTROPY,
    BinConfig,
    EmptyInput,
    entropy,
    h_spread,
    normalized_entropy,
    profile,
    quartiles,
    recommend,
)
from oracles import oracle_entropy_bits, oracle_tukey_hinges


def ds(*values: float, id: str = "d"):
    return make_dataset(id, [(f"c{i}", v) for i, v in enumerate(values)])


# strategy: integer-valued datasets, 2..20 categories, at least one positive
values_lists = st.lists(st.integers(min_value=0, max_value=1000), min_size=2, max_size=20).filter(
    lambda vs: any(v > 0 for v in vs)
)


class TestEntropy:
    def test_single_mass_is_zero(self):
        assert entropy(ds(10, 0, 0, 0)) == 0.0

    def test_uniform_four_is_two_bits(self):
        assert entropy(ds(5, 5, 5, 5)) == pytest.approx(2.0, abs=1e-12)

    def test_1_1_2_is_1_5_bits(self):
        # -(0.25*log2 0.25)*2 - 0.5*log2 0.5 = 0.5 + 0.5 + 0.5
        assert entropy(ds(1, 1, 2)) == pytest.approx(1.5, abs=1e-12)

    def test_all_zero_rejected_at_construction(self):
        with pytest.raises(InvalidDataset):
            ds(0, 0, 0)

    @given(values_lists)
    def test_matches_log_identity_oracle(self, values):
        d = ds(*values)
        assert entropy(d) == pytest.approx(oracle_entropy_bits(values), abs=1e-9)

    @given(values_lists, st.randoms(use_true_random=False))
    def test_permutation_invariance(self, values, rnd):
        shuffled = list(values)
        rnd.shuffle(shuffled)
        assert entropy(ds(*shuffled)) == pytest.approx(entropy(ds(*values)), abs=1e-12)
        assert h_spread(ds(*shuffled)) == h_spread(ds(*values))
        assert quartiles(shuffled) == quartiles(values)

    @given(values_lists, st.floats(min_value=1e-3, max_value=1e3, allow_nan=False))
    def test_scale_invariance(self, values, c):
        scaled = [v * c for v in values]
        assert entropy(ds(*scaled)) == pytest.approx(entropy(ds(*values)), rel=1e-9, abs=1e-9)


class TestNormalizedEntropy:
    @pytest.mark.parametrize("n", range(2, 21))
    def test_uniform_is_one(self, n):
        assert normalized_entropy(ds(*([7] * n))) == pytest.approx(1.0, abs=1e-12)

    def test_single_mass_is_zero(self):
        assert normalized_entropy(ds(0, 42, 0)) == 0.0

    def test_1_1_2(self):
        assert normalized_entropy(ds(1, 1, 2)) == pytest.approx(1.5 / math.log2(3), abs=1e-12)
        assert normalized_entropy(ds(1, 1, 2)) == pytest.approx(0.9464, abs=1e-4)

    @given(values_lists)
    def test_bounds(self, values):
        ne = normalized_entropy(ds(*values))
        assert 0.0 <= ne <= 1.0

    @given(st.lists(st.integers(min_value=0, max_value=500), min_size=2, max_size=20).filter(lambda vs: any(vs)))
    def test_extremes_characterized(self, values):
        ne = normalized_entropy(ds(*values))
        if len(set(values)) == 1:
            assert ne == pytest.approx(1.0, abs=1e-12)
        else:
            assert ne < 1.0 - 1e-10
        positives = [v for v in values if v > 0]
        if len(positives) == 1:
            assert ne == 0.0
        else:
            assert ne > 0.0

    @given(values_lists, st.floats(min_value=1e-3, max_value=1e3, allow_nan=False))
    def test_scale_invariance(self, values, c):
        scaled = [v * c for v in values]
        assert normalized_entropy(ds(*scaled)) == pytest.approx(normalized_entropy(ds(*values)), abs=1e-9)


class TestQuartiles:
    def test_five_elements(self):
        assert quartiles([1, 2, 3, 4, 100]) == (2, 3, 4)

    def test_constant(self):
        assert quartiles([5, 5, 5, 5]) == (5, 5, 5)

    def test_even_count(self):
        assert quartiles([1, 2, 3, 4]) == (1.5, 2.5, 3.5)

    def test_empty_raises(self):
        with pytest.raises(EmptyInput):
            quartiles([])

    def test_order_irrelevant(self):
        assert quartiles([100, 4, 3, 2, 1]) == (2, 3, 4)

    def test_exhaustive_small_instances_vs_depth_oracle(self):
        # sizes 1..6 over {0..4}; the full <=8 sweep lives in the acceptance suite
        for n in range(1, 7):
            for combo in itertools.product(range(5), repeat=n):
                vals = list(combo)
                got = quartiles(vals)
                want = oracle_tukey_hinges(vals)
                assert got == pytest.approx(want), f"values={vals}"

    @given(st.lists(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False), min_size=1, max_size=40))
    def test_matches_depth_oracle(self, values):
        q1, med, q3 = quartiles(values)
        o1, omed, o3 = oracle_tukey_hinges(values)
        assert (q1, med, q3) == pytest.approx((o1, omed, o3))
        assert q1 <= med <= q3


class TestHSpread:
    def test_far_out_max(self):
        assert h_spread(ds(1, 2, 3, 4, 100)) == 48.0

    def test_constant_is_zero(self):
        assert h_spread(ds(5, 5, 5, 5)) == 0.0

    def test_zero_iqr_with_excess_is_inf(self):
        assert h_spread(ds(1, 1, 1, 1, 9)) == math.inf

    @given(values_lists)
    def test_non_negative(self, values):
        assert h_spread(ds(*values)) >= 0.0

    @given(values_lists, st.integers(min_value=1, max_value=1000))
    def test_scale_invariance(self, values, c):
        # integer scaling keeps quartile arithmetic exact
        assert h_spread(ds(*[v * c for v in values])) == h_spread(ds(*values))


class TestProfileAndBins:
    def test_uniform_dataset_bins(self):
        p = profile(ds(1, 1, 1, 1, 1))
        assert p.entropy_bin == "0.9-1.0"
        assert p.hspread_bin == "0-1.5"
        assert p.normalized_entropy == pytest.approx(1.0, abs=1e-12)
        assert p.h_spread == 0.0

    def test_direct_edge_lookup(self):
        bins = DEFAULT_BINS
        assert bins.entropy_bin(0.58) == "0.45-0.6"
        assert bins.hspread_bin(2.0) == "1.5-3"

    def test_below_range_entropy(self):
        p = profile(ds(97, 1, 1, 1))
        assert p.normalized_entropy < 0.45  # verified against the entropy oracle below
        assert (
            oracle_entropy_bits([97, 1, 1, 1]) / math.log2(4) < 0.45
        )
        assert p.entropy_bin == BinConfig.BELOW_RANGE

    def test_boundary_values_go_up(self):
        bins = DEFAULT_BINS
        assert bins.hspread_bin(4.5) == "4.5+"
        assert bins.hspread_bin(1.5) == "1.5-3"
        assert bins.hspread_bin(3.0) == "3-4.5"
        assert bins.hspread_bin(0.0) == "0-1.5"
        assert bins.hspread_bin(math.inf) == "4.5+"
        assert bins.entropy_bin(0.75) == "0.75-0.9"
        assert bins.entropy_bin(0.45) == "0.45-0.6"
        assert bins.entropy_bin(1.0) == "0.9-1.0"

    def test_profile_reports_quartile_convention(self):
        assert profile(ds(1, 2, 3)).quartile_method == "tukey-hinges"

    def test_profile_json_serializes_infinity(self):
        p = profile(ds(1, 1, 1, 1, 9))
        assert p.to_json_dict()["h_spread"] == "inf"


class TestRecommend:
    def test_uniform_stays_standard(self):
        r = recommend(ds(3, 3, 3, 3))
        assert not r.use_wrapped
        assert r.reasons == ()

    def test_low_entropy_triggers_wrapped(self):
        r = recommend(ds(97, 1, 1, 1))
        assert r.use_wrapped
        assert LOW_ENTROPY in r.reasons

    def test_high_hspread_triggers_wrapped(self):
        r = recommend(ds(1, 1, 1, 1, 9))
        assert r.use_wrapped
        assert HIGH_H_SPREAD in r.reasons

    def test_hspread_can_fire_alone(self):
        # near-uniform but with a far-out max: Q1 == Q3 == 10, max > Q3
        r = recommend(ds(10, 10, 10, 10, 10, 10, 25))
        assert r.use_wrapped
        assert r.reasons == (HIGH_H_SPREAD,)

    @given(values_lists)
    def test_recommendation_is_function_of_profile(self, values):
        d = ds(*values)
        p = profile(d)
        r = recommend(d)
        expect = p.normalized_entropy < r.entropy_cutoff or p.h_spread > r.hspread_cutoff
        assert r.use_wrapped == expect
        assert r.use_wrapped == bool(r.reasons)

    def test_cutoffs_configurable(self):
        d = ds(1, 2, 3, 4)
        assert not recommend(d).use_wrapped
        assert recommend(d, entropy_cutoff=1.1).use_wrapped
