"""Tests for the sigma-form term lists on exact solutions."""

import math

import pytest

from rmtsums.bessel.xi import xi_N1_closed
from rmtsums.painleve.config import GridConfig, ResidualReport
from rmtsums.painleve.equations import (
    bessel_finite_terms,
    bessel_inf_terms,
    combine,
    hankel_terms,
    p5_terms,
    propagated_error,
    sigma_p3_terms,
)


class TestExactSolutions:
    """Test that closed-form solutions annihilate each equation."""

    @pytest.mark.parametrize("t", [0.1, 1.0, 7.5])
    def test_sigma_p3_cauchy(self, t: float) -> None:
        """Test tau = -t/2 at s = 0."""
        assert sum(sigma_p3_terms(0.0, t, -0.5 * t, -0.5, 0.0)) == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("n", [1, 4, 9])
    @pytest.mark.parametrize("t", [0.3, 2.0])
    def test_p5_cauchy(self, n: int, t: float) -> None:
        """Test tau_N = -t/2 at s = 0 for every N."""
        terms = p5_terms(0.0, n, t, -0.5 * t, -0.5, 0.0)

        assert sum(terms) == pytest.approx(0.0, abs=1e-13)

    def test_hankel_constant_weight(self) -> None:
        """Test H_N = 0 when lambda = 0."""
        assert sum(hankel_terms(3, 0.5, 0.0, 1.0, 0.0, 0.0, 0.0)) == 0.0

    @pytest.mark.parametrize("nu", [0.5, 1.5, 2.0])
    @pytest.mark.parametrize("t", [0.25, 1.0, 3.0])
    def test_bessel_finite_n1_closed_form(self, nu: float, t: float) -> None:
        """Test the N=1 K-Bessel ratio against the finite-N equation."""
        xi = xi_N1_closed(nu, t)
        result = combine(bessel_finite_terms(nu, 1, t, xi.tau, xi.dtau, xi.d2tau), t)

        assert abs(result.normalized) < 1e-12

    def test_bessel_inf_at_boundary(self) -> None:
        """Test that h = nu^2/4, h' = -1/nu satisfies the limit equation at t = 0."""
        nu = 2.0

        assert sum(bessel_inf_terms(nu, 0.0, 1.0, -0.5, 0.0)) == pytest.approx(0.0, abs=1e-15)


class TestCombine:
    """Test normalization and error propagation."""

    def test_normalized_by_largest_term(self) -> None:
        """Test raw / max(1, max |term|)."""
        result = combine((10.0, -4.0, -5.0), 1.0)

        assert result.raw == 1.0
        assert result.normalized == pytest.approx(0.1)
        assert result.scale == 10.0

    def test_small_terms_not_inflated(self) -> None:
        """Test that the scale never drops below one."""
        assert combine((1e-3, 1e-3), 0.5).normalized == pytest.approx(2e-3)

    def test_propagated_error_linear(self) -> None:
        """Test the first-order error of a residual linear in its inputs."""
        err = propagated_error(lambda a, b, c: (a, 2.0 * b, -3.0 * c), (1.0, 1.0, 1.0), 1e-3)

        assert err == pytest.approx(6e-3)


class TestReportTypes:
    """Test grid and report validation."""

    def test_default_grid(self) -> None:
        """Test 16 geometric points on [0.05, 8]."""
        grid = GridConfig().grid()

        assert len(grid) == 16
        assert grid[0] == pytest.approx(0.05)
        assert grid[-1] == pytest.approx(8.0)
        assert grid[1] / grid[0] == pytest.approx(grid[-1] / grid[-2])

    def test_grid_bounds_validated(self) -> None:
        """Test that t_max <= t_min is rejected."""
        with pytest.raises(ValueError, match="t_max must exceed t_min"):
            GridConfig(t_min=1.0, t_max=0.5)

    def test_unsorted_report_rejected(self) -> None:
        """Test that a descending grid is rejected."""
        with pytest.raises(ValueError, match="ascending"):
            ResidualReport(
                equation="sigma_p3_inf",
                grid=(2.0, 1.0),
                residuals=(0.0, 0.0),
                normalized=(0.0, 0.0),
                err_est=(0.0, 0.0),
                max_abs=0.0,
                diff_step=0.0,
            )

    def test_non_finite_residual_rejected(self) -> None:
        """Test that NaN residuals are rejected."""
        with pytest.raises(ValueError, match="non-finite"):
            ResidualReport(
                equation="sigma_p3_inf",
                grid=(1.0,),
                residuals=(math.nan,),
                normalized=(math.nan,),
                err_est=(0.0,),
                max_abs=0.0,
                diff_step=0.0,
            )
