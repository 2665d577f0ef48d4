"""Economy model: construction, manipulations, and generator properties."""

import numpy as np
import pytest

from sybilineq.econ import (
    DEFAULT_TOL,
    AggregationMatrix,
    ReportMatrix,
    Seed,
    Tolerance,
    WealthDistribution,
    aggregate,
    apply_report,
    check_conservation,
    duplicate,
    is_pure_sybil,
    make_distribution,
    merge_last_two,
    random_aggregation,
    random_pure_sybil,
    transfer,
)
from sybilineq.errors import (
    DimensionMismatchError,
    EmptyDistributionError,
    InvalidSplitCountError,
    KTooSmallError,
    NegativeWealthError,
    NotProgressiveError,
)


class TestWealthDistribution:
    def test_direct_construction(self):
        x = make_distribution([5, 10])
        assert list(x) == [5.0, 10.0]
        assert x.total() == 15.0
        assert x.mean() == 7.5
        assert x.k == len(x) == 2

    def test_empty_rejected(self):
        with pytest.raises(EmptyDistributionError):
            make_distribution([])

    def test_negative_rejected_with_location(self):
        with pytest.raises(NegativeWealthError) as exc:
            make_distribution([1, -2])
        assert exc.value.index == 1
        assert exc.value.value == -2.0

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            make_distribution([1.0, float("nan")])

    def test_values_are_read_only(self):
        x = make_distribution([1, 2])
        with pytest.raises(ValueError):
            x.values[0] = 3.0

    def test_equality_by_values(self):
        assert make_distribution([1, 2]) == make_distribution([1.0, 2.0])
        assert make_distribution([1, 2]) != make_distribution([2, 1])


class TestApplyReport:
    def test_egalitarian_split(self):
        hidden = make_distribution([5, 10])
        r = ReportMatrix([[1, 0, 0], [0, 0.5, 0.5]])
        assert list(apply_report(hidden, r)) == [5.0, 5.0, 5.0]

    def test_identity_report(self):
        assert list(apply_report(make_distribution([7]), ReportMatrix([[1.0]]))) == [7.0]

    def test_single_actor_split(self):
        obs = apply_report(make_distribution([1]), ReportMatrix([[0.9, 0.1]]))
        assert list(obs) == [0.9, 0.1]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            apply_report(make_distribution([1, 2, 3]), ReportMatrix([[1.0], [1.0]]))


class TestConservation:
    def test_valid_manipulation(self):
        assert check_conservation(
            make_distribution([5, 10]),
            [[1, 0, 0], [0, 0.5, 0.5]],
            make_distribution([5, 5, 5]),
        )

    def test_wealth_created_from_thin_air(self):
        assert not check_conservation(
            make_distribution([5, 10]), [[1, 0], [0, 1]], make_distribution([5, 11])
        )

    def test_row_sum_below_one(self):
        assert not check_conservation(
            make_distribution([1]), [[0.5, 0.4]], make_distribution([0.5, 0.4])
        )

    def test_accepts_report_matrix_instances(self):
        r = ReportMatrix([[0.25, 0.75]])
        hidden = make_distribution([4])
        assert check_conservation(hidden, r, apply_report(hidden, r))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            check_conservation(
                make_distribution([1, 2]), [[1.0]], make_distribution([3])
            )


class TestPureSybil:
    def test_disjoint_columns(self):
        assert is_pure_sybil(ReportMatrix([[1, 0, 0], [0, 0.5, 0.5]]))

    def test_shared_column_is_collusion(self):
        assert not is_pure_sybil(ReportMatrix([[0.5, 0.5], [0, 1]]))

    def test_single_actor(self):
        assert is_pure_sybil(ReportMatrix([[1.0]]))


class TestRandomPureSybil:
    def test_no_split_is_truthful(self):
        hidden = make_distribution([5, 10])
        r = random_pure_sybil(hidden, [1, 1], seed=123)
        assert np.array_equal(r.entries, np.eye(2))

    def test_single_actor_two_identities(self):
        r = random_pure_sybil(make_distribution([1]), [2], seed=5)
        row = r.entries[0]
        assert row.shape == (2,)
        assert abs(row.sum() - 1.0) < 1e-12
        assert np.all(row >= 0) and np.all(row <= 1)

    def test_invalid_split_counts(self):
        hidden = make_distribution([5, 10])
        with pytest.raises(InvalidSplitCountError):
            random_pure_sybil(hidden, [1], seed=0)
        with pytest.raises(InvalidSplitCountError):
            random_pure_sybil(hidden, [0, 2], seed=0)

    def test_generated_matrices_conserve_and_stay_pure(self):
        seed = Seed(42)
        for trial in range(200):
            rng = seed.rng(trial)
            k = int(rng.integers(1, 6))
            hidden = WealthDistribution(10.0 ** rng.uniform(-2, 2, size=k))
            splits = [int(c) for c in rng.integers(1, 4, size=k)]
            r = random_pure_sybil(hidden, splits, rng)
            assert is_pure_sybil(r)
            observable = apply_report(hidden, r)
            assert check_conservation(hidden, r, observable)
            assert observable.k == sum(splits)

    def test_deterministic_under_seed(self):
        hidden = make_distribution([3, 4, 5])
        a = random_pure_sybil(hidden, [2, 1, 3], seed=99)
        b = random_pure_sybil(hidden, [2, 1, 3], seed=99)
        assert np.array_equal(a.entries, b.entries)


class TestRandomAggregation:
    def test_k2_shape_is_forced(self):
        a = random_aggregation(2, seed=1)
        assert np.array_equal(a.entries, [[1.0, 1.0]])

    def test_columns_sum_to_one(self):
        a = random_aggregation(3, seed=7)
        assert a.entries.shape == (2, 3)
        assert np.allclose(a.entries.sum(axis=0), 1.0, atol=1e-12)

    def test_sum_preservation(self):
        x = make_distribution([1, 2, 3])
        y = aggregate(x, random_aggregation(3, seed=7))
        assert abs(y.total() - 6.0) < 1e-12

    def test_k_too_small(self):
        with pytest.raises(KTooSmallError):
            random_aggregation(1, seed=0)

    def test_deterministic_under_seed(self):
        a = random_aggregation(5, seed=31)
        b = random_aggregation(5, seed=31)
        assert np.array_equal(a.entries, b.entries)

    def test_sum_preserved_for_random_inputs(self):
        seed = Seed(42)
        tol = DEFAULT_TOL
        for trial in range(200):
            rng = seed.rng(1000 + trial)
            k = int(rng.integers(2, 8))
            x = WealthDistribution(10.0 ** rng.uniform(-3, 3, size=k))
            y = aggregate(x, random_aggregation(k, rng))
            assert y.k == k - 1
            assert tol.close(y.total(), x.total())


class TestAggregate:
    def test_full_condensation_pair(self):
        x = make_distribution([5, 10])
        assert list(aggregate(x, AggregationMatrix([[1.0, 1.0]]))) == [15.0]

    def test_merge_last_two(self):
        x = make_distribution([1, 2, 3])
        assert list(aggregate(x, merge_last_two(3))) == [1.0, 5.0]

    def test_repeated_condensation_reaches_total(self):
        x = make_distribution([1, 2, 3, 4])
        while x.k > 1:
            x = aggregate(x, merge_last_two(x.k))
            assert abs(x.total() - 10.0) < 1e-12
        assert list(x) == [10.0]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            aggregate(make_distribution([1, 2, 3]), AggregationMatrix([[1.0, 1.0]]))


class TestTransfer:
    def test_first_chain_step(self):
        x = transfer(make_distribution([0.9, 0.1]), 0, 1, 0.3)
        assert list(x) == pytest.approx([0.6, 0.4], abs=1e-12)

    def test_equalizing_step(self):
        x = transfer(make_distribution([0.6, 0.4]), 0, 1, 0.1)
        assert list(x) == pytest.approx([0.5, 0.5], abs=1e-12)

    def test_equal_endpoints_rejected(self):
        with pytest.raises(NotProgressiveError):
            transfer(make_distribution([1, 1]), 0, 1, 0.1)

    def test_delta_beyond_half_gap_rejected(self):
        with pytest.raises(NotProgressiveError):
            transfer(make_distribution([1, 0]), 0, 1, 0.6)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            transfer(make_distribution([1, 0]), 0, 5, 0.1)

    def test_total_and_rank_preserved(self):
        seed = Seed(7)
        for trial in range(200):
            rng = seed.rng(trial)
            x = WealthDistribution(rng.random(4) + 0.01)
            i, j = (int(v) for v in rng.choice(4, size=2, replace=False))
            if x[i] == x[j]:
                continue
            frm, to = (i, j) if x[i] > x[j] else (j, i)
            delta = float(rng.uniform(0, 1)) * (x[frm] - x[to]) / 2
            if delta <= 0:
                continue
            moved = transfer(x, frm, to, delta)
            assert abs(moved.total() - x.total()) < 1e-12
            assert moved[frm] >= moved[to]


class TestDuplicate:
    def test_interleaves_nothing(self):
        assert list(duplicate(make_distribution([5, 10]))) == [5.0, 10.0, 5.0, 10.0]

    def test_zero(self):
        assert list(duplicate(make_distribution([0]))) == [0.0, 0.0]

    def test_total_doubles(self):
        x = make_distribution([1, 2, 3])
        assert duplicate(x).total() == 2 * x.total()
        assert list(duplicate(x)) == [1.0, 2.0, 3.0, 1.0, 2.0, 3.0]


class TestSeed:
    def test_same_master_same_stream(self):
        assert np.array_equal(Seed(42).rng(3).random(5), Seed(42).rng(3).random(5))

    def test_paths_are_independent(self):
        assert not np.array_equal(Seed(42).rng(1).random(5), Seed(42).rng(2).random(5))

    def test_range_validation(self):
        with pytest.raises(ValueError):
            Seed(-1)
        with pytest.raises(ValueError):
            Seed(2**64)


class TestTolerance:
    def test_close_is_scale_robust(self):
        tol = Tolerance()
        assert tol.close(1e6, 1e6 + 1e-4)
        assert not tol.close(1e-6, 2e-6)
        assert tol.close(0.0, 5e-13)


class TestMatrixValidation:
    def test_report_rejects_bad_row_sum(self):
        with pytest.raises(ValueError):
            ReportMatrix([[0.5, 0.4]])

    def test_report_rejects_negative(self):
        with pytest.raises(ValueError):
            ReportMatrix([[1.5, -0.5]])

    def test_aggregation_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            AggregationMatrix([[1.0, 0.0], [0.0, 1.0]])

    def test_aggregation_rejects_bad_column_sum(self):
        with pytest.raises(ValueError):
            AggregationMatrix([[0.5, 1.0]])
