"""Tests for the log-derivatives xi_N and the large-N limit h^(nu)."""

import math

import pytest

from rmtsums.bessel.config import BesselParams
from rmtsums.bessel.laplace import psi_N1_closed
from rmtsums.bessel.limit import h_nu_estimate, h_nu_profile
from rmtsums.bessel.xi import xi_N, xi_N1_closed
from rmtsums.errors import DomainError


class TestXiClosedForm:
    """Test the N=1 Bessel-K ratio formula."""

    def test_half_integer_order(self) -> None:
        """Test nu=1/2, where K_{1/2}/K_{3/2} = z/(1+z) is elementary."""
        t = 2.25
        z = 2.0 * math.sqrt(t)
        result = xi_N1_closed(0.5, t)

        assert result.tau == pytest.approx(-0.5 * z * z / (1.0 + z), rel=1e-13)

    def test_derivatives_match_closed_psi(self) -> None:
        """Test the analytic triple against differences of log psi_1."""
        nu, t = 2.0, 1.0
        numeric = xi_N(
            BesselParams(nu=nu, n=1, t=t),
            psi_evaluator=lambda x: psi_N1_closed(nu, x).value,
        )
        exact = xi_N1_closed(nu, t)

        assert numeric.tau == pytest.approx(exact.tau, abs=1e-9)
        assert numeric.dtau == pytest.approx(exact.dtau, abs=1e-8)
        assert numeric.d2tau == pytest.approx(exact.d2tau, abs=1e-6)

    @pytest.mark.parametrize("nu", [1.5, 2.0, 4.0])
    def test_small_t_slope(self, nu: float) -> None:
        """Test xi_1(t)/t -> -1/nu as t -> 0+."""
        t = 1e-5

        assert xi_N1_closed(nu, t).tau / t == pytest.approx(-1.0 / nu, rel=1e-3)

    def test_domain(self) -> None:
        """Test that t <= 0 raises DomainError."""
        with pytest.raises(DomainError, match="t must be positive"):
            xi_N1_closed(1.0, 0.0)


class TestXiQuadrature:
    """Test xi_N computed from the Hankel-quadrature psi_N."""

    def test_n1_matches_closed_form(self) -> None:
        """Test nu=2, N=1, t=1 against the K-Bessel derivative to 1e-7."""
        numeric = xi_N(BesselParams(nu=2.0, n=1, t=1.0))
        exact = xi_N1_closed(2.0, 1.0)

        assert numeric.tau == pytest.approx(exact.tau, abs=1e-7)
        assert numeric.dtau == pytest.approx(exact.dtau, abs=1e-6)

    @pytest.mark.parametrize("n", [2, 4])
    def test_boundary_slope(self, n: int) -> None:
        """Test xi_N(t)/t -> -1/nu for every N when nu > 1."""
        nu, t = 2.0, 1e-3
        result = xi_N(BesselParams(nu=nu, n=n, t=t))

        assert result.tau / t == pytest.approx(-1.0 / nu, rel=5e-3)
        assert result.dtau == pytest.approx(-1.0 / nu, rel=1e-2)

    def test_zero_t_rejected(self) -> None:
        """Test that t = 0 raises DomainError."""
        with pytest.raises(DomainError, match="t > 0"):
            xi_N(BesselParams(nu=1.0, n=2, t=0.0))


class TestLimit:
    """Test the 1/N extrapolation of xi_N."""

    @pytest.mark.parametrize("n_list", [(4,), (4, 4), (8, 4)])
    def test_invalid_n_list(self, n_list: tuple[int, ...]) -> None:
        """Test that short or non-ascending size lists raise DomainError."""
        with pytest.raises(DomainError, match="N_list"):
            h_nu_estimate(1.5, 1.0, n_list)

    def test_boundary_value(self) -> None:
        """Test h(0+) = nu^2/4 with slope -1/nu at nu=2."""
        t = 0.01
        result = h_nu_estimate(2.0, t, (2, 4))

        assert result.value == pytest.approx(1.0 - t / 2.0, abs=2e-4)
        assert result.terms_used == 2

    def test_profile_without_residual_dof(self) -> None:
        """Test that two sizes give a tableau but no OLS standard error."""
        profile = h_nu_profile(2.0, 0.5, (2, 4))

        assert profile.n_list == (2, 4)
        assert len(profile.xi_by_n) == 2
        assert math.isnan(profile.ols_stderr)

    @pytest.mark.slow
    def test_profile_stabilizes(self) -> None:
        """Test nu=1.5, t=1 over N = 4, 8, 16: tableau and OLS agree."""
        profile = h_nu_profile(1.5, 1.0, (4, 8, 16))
        estimate = h_nu_estimate(1.5, 1.0, (4, 8, 16))

        assert profile.h == pytest.approx(estimate.value, abs=1e-12)
        assert profile.err_est < 1e-2
        assert profile.h == pytest.approx(profile.ols_intercept, abs=5e-3)
        assert profile.ols_stderr >= 0.0
