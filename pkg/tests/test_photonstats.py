import numpy as np
import pytest

from bubblerad import photonstats
from bubblerad.photonstats import (
    KIND_SQUEEZED,
    KIND_THERMAL,
    PairEnsemble,
    sample,
    theoretical_variance,
    variance_nab,
    variance_nab_expansion,
)


def _variance_se(x):
    """Standard error of the sample variance from sample moments."""
    m = len(x)
    d = x - x.mean()
    m2 = np.mean(d**2)
    m4 = np.mean(d**4)
    return np.sqrt((m4 - (m - 3) / (m - 1) * m2**2) / m)


class TestTheory:
    def test_thermal_unit_means(self):
        assert theoretical_variance(KIND_THERMAL, 1.0, 1.0) == 4.0

    def test_squeezed_always_zero(self):
        assert theoretical_variance(KIND_SQUEEZED, 3.7, 0.4) == 0.0

    def test_vacuum(self):
        assert theoretical_variance(KIND_THERMAL, 0.0, 0.0) == 0.0

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            theoretical_variance("coherent", 1.0, 1.0)

    def test_negative_mean(self):
        with pytest.raises(ValueError):
            theoretical_variance(KIND_THERMAL, -0.1, 0.0)


class TestSampler:
    def test_vacuum_is_all_zero(self):
        ens = sample(KIND_THERMAL, 0.0, 1000, seed=1)
        assert np.all(ens.n_a == 0) and np.all(ens.n_b == 0)

    def test_squeezed_pairs_exactly_correlated(self):
        ens = sample(KIND_SQUEEZED, 1.0, 100_000, seed=2)
        assert np.array_equal(ens.n_a, ens.n_b)
        assert variance_nab(ens).value == 0.0

    def test_mean_converges(self):
        mean = 1.4
        count = 100_000
        ens = sample(KIND_THERMAL, mean, count, seed=3)
        se = np.sqrt(mean * (mean + 1.0) / count)
        assert abs(ens.n_a.mean() - mean) < 5.0 * se
        assert abs(ens.n_b.mean() - mean) < 5.0 * se

    def test_deterministic(self):
        a = sample(KIND_THERMAL, 0.8, 5000, seed=99)
        b = sample(KIND_THERMAL, 0.8, 5000, seed=99)
        assert np.array_equal(a.n_a, b.n_a) and np.array_equal(a.n_b, b.n_b)
        c = sample(KIND_THERMAL, 0.8, 5000, seed=100)
        assert not np.array_equal(a.n_a, c.n_a)

    def test_geometric_marginal(self):
        # P(0) = 1/(1+N), P(1) = N/(1+N)^2 for the Bose-Einstein law
        mean = 1.0
        ens = sample(KIND_THERMAL, mean, 200_000, seed=4)
        p0 = np.mean(ens.n_a == 0)
        p1 = np.mean(ens.n_a == 1)
        assert p0 == pytest.approx(0.5, abs=0.005)
        assert p1 == pytest.approx(0.25, abs=0.005)

    def test_validation(self):
        with pytest.raises(ValueError):
            sample("bogus", 1.0, 10, seed=0)
        with pytest.raises(ValueError):
            sample(KIND_THERMAL, -1.0, 10, seed=0)
        with pytest.raises(ValueError):
            sample(KIND_THERMAL, 1.0, 0, seed=0)


class TestVarianceEstimators:
    def test_identical_samples_zero(self):
        ens = PairEnsemble(KIND_SQUEEZED, 1.0, np.full(10, 3), np.full(10, 3), seed=0)
        assert variance_nab(ens).value == 0.0

    def test_expansion_identity(self):
        # four-term moment expansion equals the direct unbiased variance
        rng = np.random.default_rng(12)
        for kind in (KIND_THERMAL, KIND_SQUEEZED):
            ens = sample(kind, 2.0, 4000, seed=int(rng.integers(1 << 30)))
            direct = variance_nab(ens).value
            expanded = variance_nab_expansion(ens)
            assert expanded == pytest.approx(direct, rel=1e-12, abs=1e-12)
        # an asymmetric hand-built ensemble exercises the cross terms
        ens = PairEnsemble(KIND_THERMAL, 1.0,
                           rng.integers(0, 9, 500), rng.integers(0, 3, 500), seed=0)
        assert variance_nab_expansion(ens) == pytest.approx(variance_nab(ens).value,
                                                            rel=1e-12)

    def test_thermal_mc_matches_theory(self):
        ens = sample(KIND_THERMAL, 1.0, 100_000, seed=21)
        est = variance_nab(ens)
        assert est.std_error > 0.0
        assert abs(est.value - 4.0) < 5.0 * est.std_error

    def test_squeezed_marginal_is_thermal(self):
        # single-mode variance of the pair-correlated ensemble is N(N+1)
        mean = 1.0
        ens = sample(KIND_SQUEEZED, mean, 100_000, seed=22)
        x = ens.n_a.astype(float)
        se = _variance_se(x)
        assert abs(np.var(x, ddof=1) - mean * (mean + 1.0)) < 5.0 * se

    def test_discrimination_power(self):
        # kinds separated by > 10 standard errors for modest ensembles
        for mean in (0.5, 1.0, 5.0):
            th = variance_nab(sample(KIND_THERMAL, mean, 10_000, seed=31))
            sq = variance_nab(sample(KIND_SQUEEZED, mean, 10_000, seed=32))
            gap = abs(th.value - sq.value)
            combined = np.hypot(th.std_error, sq.std_error)
            assert gap > 10.0 * combined

    def test_too_few_samples(self):
        ens = PairEnsemble(KIND_THERMAL, 1.0, np.array([1]), np.array([0]), seed=0)
        with pytest.raises(ValueError):
            variance_nab(ens)

    def test_ensemble_validation(self):
        with pytest.raises(ValueError):
            PairEnsemble("bogus", 1.0, np.array([1]), np.array([1]), seed=0)
        with pytest.raises(ValueError):
            PairEnsemble(KIND_THERMAL, 1.0, np.array([1, 2]), np.array([1]), seed=0)
        with pytest.raises(ValueError):
            PairEnsemble(KIND_THERMAL, 1.0, np.array([-1]), np.array([1]), seed=0)
