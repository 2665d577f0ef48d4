"""Measure values against independent oracles, domain errors, and the
invariances the catalog is supposed to carry."""

import math

import numpy as np
import pytest

from sybilineq.econ import Seed, WealthDistribution, duplicate, make_distribution
from sybilineq.errors import (
    UnknownMeasureError,
    ZeroEntryError,
    ZeroTotalWealthError,
)
from sybilineq.measures import (
    CATALOG_IDS,
    atkinson,
    catalog,
    constant_measure,
    cv,
    diagnostic,
    ge,
    gini,
    hhi,
    parse_measure,
    sum_dependent_measure,
    theil_l,
    theil_t,
)


def brute_gini(values):
    """Independent double-sum oracle."""
    k = len(values)
    num = sum(abs(a - b) for a in values for b in values)
    return num / (2 * k * sum(values))


def positive_vectors(n, seed=42, max_k=8):
    out = []
    master = Seed(seed)
    for trial in range(n):
        rng = master.rng(trial)
        k = int(rng.integers(2, max_k + 1))
        out.append(WealthDistribution(10.0 ** rng.uniform(-2, 2, size=k)))
    return out


class TestGini:
    def test_known_values(self):
        assert gini(make_distribution([1, 0])) == pytest.approx(0.5, abs=1e-12)
        assert gini(make_distribution([1, 1])) == 0.0
        assert gini(make_distribution([5, 10])) == pytest.approx(1 / 6, abs=1e-12)

    def test_against_brute_oracle(self):
        for x in positive_vectors(50):
            assert gini(x) == pytest.approx(brute_gini(list(x)), rel=1e-12)

    def test_zero_total_rejected(self):
        with pytest.raises(ZeroTotalWealthError):
            gini(make_distribution([0, 0]))

    def test_bounds(self):
        for x in positive_vectors(100):
            value = gini(x)
            assert 0.0 <= value <= 1.0 - 1.0 / x.k + 1e-12

    def test_max_concentration_hits_upper_bound(self):
        x = make_distribution([10, 0, 0, 0])
        assert gini(x) == pytest.approx(1 - 1 / 4, abs=1e-12)


class TestGE:
    def test_theil_t_value(self):
        e = math.e
        x = make_distribution([e / 2, 3 * e / 2])
        assert ge(1.0, x) == pytest.approx(0.75 * math.log(3) - math.log(2), abs=1e-12)

    def test_mean_log_deviation_values(self):
        assert ge(0.0, make_distribution([1, 3])) == pytest.approx(
            0.5 * math.log(4 / 3), abs=1e-12
        )
        assert ge(0.0, make_distribution([1, 5])) == pytest.approx(
            0.5 * math.log(9 / 5), abs=1e-12
        )

    @pytest.mark.parametrize("c", [2.0, -1.0, 0.5])
    def test_power_branch_closed_form(self, c):
        closed = ((1 + 3.0**c) / 2.0 ** (c + 1) - 1) / (c * (c - 1))
        assert ge(c, make_distribution([1, 3])) == pytest.approx(closed, abs=1e-12)

    @pytest.mark.parametrize("c", [-1.0, 0.0, 0.5, 1.0, 2.0])
    def test_exact_zero_on_egalitarian(self, c):
        for level in (1.0, 0.37, 1234.5):
            for k in (2, 3, 7):
                x = WealthDistribution(np.full(k, level))
                assert ge(c, x) == 0.0

    def test_zero_entry_allowed_at_c1(self):
        x = make_distribution([0, 2])
        # 0*ln(0) drops out: (2/1)*ln(2)/2
        assert ge(1.0, x) == pytest.approx(math.log(2), abs=1e-12)

    @pytest.mark.parametrize("c", [0.0, -1.0])
    def test_zero_entry_rejected_for_nonpositive_c(self, c):
        with pytest.raises(ZeroEntryError) as exc:
            ge(c, make_distribution([1, 0]))
        assert exc.value.index == 1

    def test_zero_total_rejected(self):
        with pytest.raises(ZeroTotalWealthError):
            ge(2.0, make_distribution([0.0]))

    def test_non_finite_exponent_rejected(self):
        with pytest.raises(ValueError):
            ge(float("inf"), make_distribution([1, 2]))

    def test_theil_aliases_bit_for_bit(self):
        for x in positive_vectors(50):
            assert theil_t(x) == ge(1.0, x)
            assert theil_l(x) == ge(0.0, x)

    @pytest.mark.parametrize("limit_c", [0.0, 1.0])
    def test_continuity_at_branch_points(self, limit_c):
        for x in positive_vectors(100):
            base = ge(limit_c, x)
            for eps in (1e-6, -1e-6):
                assert abs(ge(limit_c + eps, x) - base) <= 1e-4


class TestClassical:
    def test_hhi(self):
        assert hhi(make_distribution([1, 3])) == pytest.approx(0.625, abs=1e-12)

    def test_cv(self):
        assert cv(make_distribution([1, 3])) == pytest.approx(0.5, abs=1e-12)

    def test_atkinson(self):
        expected = 1 - ((math.sqrt(1) + math.sqrt(3)) / 2) ** 2 / 2
        assert atkinson(0.5, make_distribution([1, 3])) == pytest.approx(
            expected, abs=1e-12
        )

    def test_atkinson_log_branch(self):
        x = make_distribution([1, 4])
        expected = 1 - math.exp((math.log(1) + math.log(4)) / 2) / 2.5
        assert atkinson(1.0, x) == pytest.approx(expected, abs=1e-12)

    def test_positive_domain_enforced(self):
        with pytest.raises(ZeroEntryError):
            atkinson(0.5, make_distribution([1, 0]))
        with pytest.raises(ZeroEntryError):
            theil_l(make_distribution([1, 0]))

    def test_zero_total_rejected(self):
        with pytest.raises(ZeroTotalWealthError):
            cv(make_distribution([0, 0]))
        with pytest.raises(ZeroTotalWealthError):
            hhi(make_distribution([0]))


class TestConstructedFamilies:
    def test_constant(self):
        zero = constant_measure(0)
        three = constant_measure(3)
        assert zero(make_distribution([5, 10])) == 0.0
        assert three(make_distribution([1, 1, 1])) == 3.0
        assert zero(make_distribution([0])) == 0.0

    def test_sum_dependent_identity(self):
        total = sum_dependent_measure()
        assert total(make_distribution([5, 10])) == 15.0
        assert total(make_distribution([5, 5, 5])) == 15.0
        assert total(make_distribution([10, 20])) == 30.0

    def test_sum_dependent_custom_g(self):
        logsum = sum_dependent_measure(math.log1p, "log1p-sum")
        assert logsum.id == "log1p-sum"
        assert logsum(make_distribution([1, 2])) == pytest.approx(math.log(4))

    def test_diagnostics(self):
        first = diagnostic("first")
        biggest = diagnostic("max")
        assert first(make_distribution([1, 2])) == 1.0
        assert first(make_distribution([2, 1])) == 2.0
        assert biggest(make_distribution([5, 10, 5])) == 10.0
        with pytest.raises(UnknownMeasureError):
            diagnostic("median")


class TestParseMeasure:
    @pytest.mark.parametrize("token", CATALOG_IDS)
    def test_catalog_round_trip(self, token):
        assert parse_measure(token).id == token

    def test_ge_and_atkinson_params(self):
        m = parse_measure("ge:0.5")
        assert m.params == (0.5,)
        assert not m.positive_only
        assert parse_measure("ge:-2").positive_only
        assert parse_measure("atkinson:0.5").positive_only
        assert parse_measure("theil-l").positive_only

    @pytest.mark.parametrize("token", ["nope", "ge:", "ge:abc", "const:inf", "diag:med"])
    def test_unknown_tokens(self, token):
        with pytest.raises(UnknownMeasureError):
            parse_measure(token)

    def test_catalog_size(self):
        assert len(catalog()) == len(CATALOG_IDS)


class TestInvariances:
    """Randomized invariance checks for the scale-free catalog members."""

    SCALE_FREE = ["gini", "ge:-1", "ge:0", "ge:0.5", "ge:1", "ge:2", "cv", "hhi",
                  "atkinson:0.5"]

    @pytest.mark.parametrize("mid", SCALE_FREE)
    def test_scale_independence(self, mid):
        m = parse_measure(mid)
        master = Seed(3)
        for trial in range(100):
            rng = master.rng(trial)
            x = WealthDistribution(10.0 ** rng.uniform(-2, 2, size=5))
            alpha = float(10.0 ** rng.uniform(-3, 3))
            assert m(x) == pytest.approx(
                m(WealthDistribution(alpha * x.values)), rel=1e-9, abs=1e-12
            )

    @pytest.mark.parametrize("mid", ["gini", "ge:0", "ge:1", "ge:2", "cv", "atkinson:0.5"])
    def test_population_insensitivity(self, mid):
        m = parse_measure(mid)
        for x in positive_vectors(50, seed=4):
            assert m(x) == pytest.approx(m(duplicate(x)), rel=1e-9, abs=1e-12)

    @pytest.mark.parametrize("mid", SCALE_FREE + ["sum", "const:3", "diag:max"])
    def test_symmetry(self, mid):
        m = parse_measure(mid)
        master = Seed(5)
        for trial in range(50):
            rng = master.rng(trial)
            x = WealthDistribution(10.0 ** rng.uniform(-2, 2, size=6))
            permuted = WealthDistribution(x.values[rng.permutation(6)])
            assert m(x) == pytest.approx(m(permuted), rel=1e-9, abs=1e-12)
