"""Tests for the seeded ensemble samplers."""

import math

import numpy as np
import pytest
from scipy import stats

from rmtsums.charfn.finite import phi_finite_N
from rmtsums.ensembles import diagnostics
from rmtsums.ensembles.config import EnsembleSpec, McmcConfig
from rmtsums.ensembles.diagnostics import batch_chains, gelman_rubin, ks_check
from rmtsums.ensembles.estimators import empirical_charfn, trace_statistic
from rmtsums.ensembles.samplers import (
    sample,
    sample_hua_pickrell,
    sample_inverse_laguerre,
    sample_lue,
    shard_generators,
)
from rmtsums.errors import DiagnosticsError

_FAST_MCMC = McmcConfig(burn_in=200, thinning=2, n_walkers=100)


class TestEnsembleSpec:
    """Test parameter validation."""

    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [
            ({"kind": "hua_pickrell", "param": -0.5, "n": 2}, "s must exceed -1/2"),
            ({"kind": "lue", "param": -1.0, "n": 2}, "nu must exceed -1"),
            ({"kind": "lue", "param": 1.0, "n": 0}, "n must be positive"),
            ({"kind": "hua_pickrell", "param": 1.0, "n": 33}, "at most 32"),
            ({"kind": "lue", "param": 1.0, "n": 2, "n_samples": 99}, "at least 100"),
            ({"kind": "lue", "param": 1.0, "n": 2, "seed": -1}, "seed must lie"),
            ({"kind": "gue", "param": 1.0, "n": 2}, "known ensemble"),
        ],
    )
    def test_invalid(self, kwargs: dict, match: str) -> None:
        """Test that out-of-range parameters raise ValueError."""
        with pytest.raises(ValueError, match=match):
            EnsembleSpec(**kwargs)

    def test_mcmc_needs_two_chains(self) -> None:
        """Test that a single chain is rejected."""
        with pytest.raises(ValueError, match="n_chains must be at least 2"):
            McmcConfig(n_chains=1)

    def test_max_rhat_above_one(self) -> None:
        """Test that an R-hat threshold of 1 or less is rejected."""
        with pytest.raises(ValueError, match="max_rhat must exceed 1"):
            McmcConfig(max_rhat=1.0)


class TestDeterminism:
    """Test the seed-per-shard reproducibility contract."""

    def test_same_seed_same_batch(self) -> None:
        """Test bit-identical output for a fixed seed."""
        first = sample_lue(1.5, 4, seed=7, n_samples=3000)
        second = sample_lue(1.5, 4, seed=7, n_samples=3000)

        np.testing.assert_array_equal(first.eigenvalues, second.eigenvalues)

    def test_independent_of_worker_count(self) -> None:
        """Test that threads across shards do not change the output."""
        serial = sample_lue(0.5, 3, seed=11, n_samples=12_000)
        threaded = sample_lue(0.5, 3, seed=11, n_samples=12_000, workers=3)

        np.testing.assert_array_equal(serial.eigenvalues, threaded.eigenvalues)
        assert list(np.unique(serial.shard)) == [0, 1, 2]

    def test_different_seeds_differ(self) -> None:
        """Test that distinct seeds give distinct batches."""
        a = sample_lue(0.5, 2, seed=1, n_samples=200)
        b = sample_lue(0.5, 2, seed=2, n_samples=200)

        assert not np.array_equal(a.eigenvalues, b.eigenvalues)

    def test_shard_streams_distinct(self) -> None:
        """Test that spawned generators give different streams."""
        g1, g2 = shard_generators(3, 2)

        assert g1.random() != g2.random()


class TestLaguerre:
    """Test the bidiagonal LUE sampler and its inverse image."""

    def test_rows_ascending_and_positive(self) -> None:
        """Test ordering and support."""
        batch = sample_lue(0.0, 5, seed=0, n_samples=500)

        assert batch.eigenvalues.shape == (500, 5)
        assert np.all(batch.eigenvalues > 0.0)
        assert np.all(np.diff(batch.eigenvalues, axis=1) >= 0.0)

    def test_n1_is_gamma(self) -> None:
        """Test that N=1 samples pass a KS test against Gamma(nu + 1)."""
        batch = sample_lue(1.5, 1, seed=2024, n_samples=20_000)

        check = ks_check(batch.eigenvalues[:, 0], stats.gamma(2.5).cdf)

        assert check.passed

    def test_trace_mean(self) -> None:
        """Test E[sum x / N] = N + nu."""
        batch = sample_lue(1.5, 4, seed=5, n_samples=20_000)
        trace = trace_statistic(batch)
        stderr = trace.std(ddof=1) / math.sqrt(trace.size)

        assert abs(trace.mean() - 5.5) <= 3.0 * stderr

    def test_inverse_is_pushforward(self) -> None:
        """Test y = 2/x of the LUE batch with the same seed."""
        lue = sample_lue(2.0, 3, seed=9, n_samples=300)
        inverse = sample_inverse_laguerre(2.0, 3, seed=9, n_samples=300)

        np.testing.assert_allclose(inverse.eigenvalues, 2.0 / lue.eigenvalues[:, ::-1])
        assert np.all(inverse.eigenvalues > 0.0)

    def test_inverse_n1_mean(self) -> None:
        """Test E[y] = 2/nu = 1 at nu=2, N=1."""
        batch = sample_inverse_laguerre(2.0, 1, seed=13, n_samples=20_000)
        y = batch.eigenvalues[:, 0]

        assert abs(y.mean() - 1.0) <= 3.0 * y.std(ddof=1) / math.sqrt(y.size)


class TestHuaPickrell:
    """Test exact N=1 sampling and the Metropolis sampler."""

    def test_n1_cauchy(self) -> None:
        """Test that s=0, N=1 samples are standard Cauchy."""
        spec = EnsembleSpec(kind="hua_pickrell", param=0.0, n=1, seed=3, n_samples=20_000)
        batch = sample_hua_pickrell(spec)

        assert ks_check(batch.eigenvalues[:, 0], stats.cauchy.cdf).passed
        assert not batch.is_mcmc
        assert math.isnan(batch.rhat)

    def test_n1_student_t(self) -> None:
        """Test that N=1 samples scaled by sqrt(2s+1) are Student-t with 2s+1 dof."""
        s = 1.0
        spec = EnsembleSpec(kind="hua_pickrell", param=s, n=1, seed=4, n_samples=20_000)
        x = sample_hua_pickrell(spec).eigenvalues[:, 0]

        assert ks_check(x * math.sqrt(2 * s + 1), stats.t(2 * s + 1).cdf).passed

    def test_mcmc_acceptance_and_shape(self) -> None:
        """Test tuned acceptance and chain-major row layout."""
        spec = EnsembleSpec(
            kind="hua_pickrell", param=1.0, n=3, seed=21, n_samples=2000, mcmc=_FAST_MCMC
        )
        batch = sample_hua_pickrell(spec)

        assert batch.is_mcmc
        assert 0.1 <= batch.acceptance_rate <= 0.6
        assert len(batch) == 2000
        assert list(np.bincount(batch.shard)) == [500] * 4
        assert np.all(np.diff(batch.eigenvalues, axis=1) > 0.0)

    def test_mcmc_charfn_matches_finite_n(self) -> None:
        """Test E cos(t trace/(2N)) against phi_N^(1) at N=3, t=1."""
        spec = EnsembleSpec(
            kind="hua_pickrell", param=1.0, n=3, seed=5, n_samples=8000, mcmc=_FAST_MCMC
        )
        estimate = empirical_charfn(sample_hua_pickrell(spec), 1.0)

        assert estimate.within(phi_finite_N(1.0, 3, 1.0).value, sigmas=4.0)

    def test_mcmc_chains_agree(self) -> None:
        """Test Gelman-Rubin below 1.05 across the four chains."""
        spec = EnsembleSpec(
            kind="hua_pickrell", param=1.0, n=3, seed=8, n_samples=4000, mcmc=_FAST_MCMC
        )
        batch = sample_hua_pickrell(spec)

        assert gelman_rubin(batch_chains(batch, np.cos(0.5 * trace_statistic(batch)))) < 1.05
        assert batch.rhat < 1.05

    def test_unconverged_chains_raise(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test DiagnosticsError when R-hat reaches the threshold."""
        monkeypatch.setattr(diagnostics, "chain_rhat", lambda batch: 1.2)
        spec = EnsembleSpec(
            kind="hua_pickrell", param=1.0, n=2, seed=2, n_samples=400, mcmc=_FAST_MCMC
        )

        with pytest.raises(DiagnosticsError, match="Gelman-Rubin statistic 1.2000"):
            sample_hua_pickrell(spec)

    def test_acceptance_outside_range_raises(self) -> None:
        """Test DiagnosticsError when an untuned proposal is far too wide."""
        cfg = McmcConfig(proposal_scale=50.0, burn_in=0, thinning=1, n_walkers=20)
        spec = EnsembleSpec(kind="hua_pickrell", param=1.0, n=2, seed=1, n_samples=100, mcmc=cfg)

        with pytest.raises(DiagnosticsError, match="acceptance"):
            sample_hua_pickrell(spec)

    def test_rejects_other_kinds(self) -> None:
        """Test that a LUE spec is refused."""
        with pytest.raises(ValueError, match="hua_pickrell"):
            sample_hua_pickrell(EnsembleSpec(kind="lue", param=1.0, n=2))

    @pytest.mark.slow
    def test_trace_cauchy_any_n(self) -> None:
        """Test that trace/N is Cauchy at s=0, N=4."""
        spec = EnsembleSpec(kind="hua_pickrell", param=0.0, n=4, seed=17, n_samples=40_000)
        batch = sample_hua_pickrell(spec)

        assert ks_check(trace_statistic(batch)[::4], stats.cauchy.cdf).passed

    @pytest.mark.slow
    def test_full_size_closure(self) -> None:
        """Test s=1, N=8, t=1 at n=10^5 within 3 sigma and R-hat < 1.05."""
        spec = EnsembleSpec(kind="hua_pickrell", param=1.0, n=8, seed=7, n_samples=100_000)
        batch = sample(spec)
        estimate = empirical_charfn(batch, 1.0)

        assert gelman_rubin(batch_chains(batch, np.cos(0.5 * trace_statistic(batch)))) < 1.05
        assert estimate.within(phi_finite_N(1.0, 8, 1.0).value)
