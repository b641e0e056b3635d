"""Tests for the LUE Laplace transforms psi_N and their normalizers."""

import math

import numpy as np
import pytest

from rmtsums.bessel.config import BesselParams, LaplaceValue
from rmtsums.bessel.laplace import (
    inverse_laguerre_log_norm,
    laplace_gram,
    lue_log_norm,
    psi_N,
    psi_N1_closed,
)
from rmtsums.bessel import laplace
from rmtsums.errors import AccuracyError, DomainError, RangeError
from rmtsums.oracles.config import QuadConfig
from rmtsums.oracles.moments import hankel_logdet
from rmtsums.oracles.quadrature import adaptive_quad

_ORACLE = QuadConfig(abs_tol=1e-12, rel_tol=1e-12, max_subdivisions=2000)


def _printed_inverse_product(nu: float, n: int) -> float:
    """Product form E_N of the inverse-Laguerre normalizer."""
    total = 1.0
    for j in range(1, n + 1):
        poch = math.prod(j - nu - 2 * n + i for i in range(j - 1))
        power = 2 * j - nu - 2 * n - 1
        denominator = 2.0**power * math.gamma(-j + nu + 2 * n + 1) * math.factorial(j - 1)
        total *= -(poch**2) * power / denominator
    return total


class TestParams:
    """Test parameter and result validation."""

    def test_nu_must_exceed_minus_one(self) -> None:
        """Test that nu <= -1 is rejected."""
        with pytest.raises(ValueError, match="nu must exceed -1"):
            BesselParams(nu=-1.0, n=2, t=1.0)

    def test_negative_t_rejected(self) -> None:
        """Test that negative t is rejected."""
        with pytest.raises(ValueError, match="nonnegative"):
            BesselParams(nu=1.0, n=2, t=-0.5)

    def test_value_above_one_rejected(self) -> None:
        """Test that a Laplace value above 1 is rejected."""
        with pytest.raises(ValueError, match="must lie in"):
            LaplaceValue(t=1.0, value=1.1, err_est=0.0, method="hankel_quadrature")


class TestNormalizers:
    """Test the LUE and inverse-Laguerre normalizing constants."""

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 1.5, 2.0])
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_lue_norm_matches_hankel_determinant(self, nu: float, n: int) -> None:
        """Test det[Gamma(j+k+nu+1)] = prod Gamma(j) Gamma(nu+j) in log space."""
        assert hankel_logdet(n, 0.0, nu, 0.0) == pytest.approx(lue_log_norm(nu, n), abs=1e-10)

    @pytest.mark.parametrize("nu", [-0.5, 0.5, 2.0])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_printed_product_is_reciprocal(self, nu: float, n: int) -> None:
        """Test that E_N equals the reciprocal of the chamber integral."""
        expected = math.exp(-inverse_laguerre_log_norm(nu, n))

        assert _printed_inverse_product(nu, n) == pytest.approx(expected, rel=1e-10)

    def test_inverse_norm_n1_by_quadrature(self) -> None:
        """Test the N=1 inverse-Laguerre integral of y^{-nu-2} e^{-2/y}."""
        nu = 1.5
        result = adaptive_quad(lambda y: y ** (-nu - 2.0) * math.exp(-2.0 / y), 0.0, math.inf)

        assert result.value == pytest.approx(math.exp(inverse_laguerre_log_norm(nu, 1)), rel=1e-7)

    def test_invalid_n(self) -> None:
        """Test that N < 1 raises DomainError."""
        with pytest.raises(DomainError, match="N must be positive"):
            lue_log_norm(1.0, 0)


class TestPsiN:
    """Test psi_N by the Hankel-quadrature route."""

    def test_value_at_zero(self) -> None:
        """Test psi_N(0) = 1 exactly."""
        result = psi_N(BesselParams(nu=1.5, n=4, t=0.0))

        assert result.value == 1.0
        assert result.err_est == 0.0

    def test_gram_is_identity_at_zero(self) -> None:
        """Test that the undeformed Gram matrix is the identity."""
        gram = laplace_gram(BesselParams(nu=0.5, n=5, t=0.0))

        np.testing.assert_allclose(gram, np.eye(5), atol=1e-10)

    def test_size_limit(self) -> None:
        """Test that N > 16 raises RangeError."""
        with pytest.raises(RangeError, match="N <= 16"):
            psi_N(BesselParams(nu=1.0, n=17, t=1.0))

    @pytest.mark.parametrize("nu", [0.0, 1.5, 2.0])
    @pytest.mark.parametrize("t", [0.25, 1.0, 4.0])
    def test_n1_matches_bessel_k(self, nu: float, t: float) -> None:
        """Test N=1 against 2 t^{(nu+1)/2} K_{nu+1}(2 sqrt t) / Gamma(nu+1)."""
        result = psi_N(BesselParams(nu=nu, n=1, t=t))

        assert result.value == pytest.approx(psi_N1_closed(nu, t).value, rel=1e-10)

    @pytest.mark.parametrize("t", [0.1, 1.0, 3.0])
    def test_closed_form_against_quadrature(self, t: float) -> None:
        """Test the K-Bessel closed form against direct quadrature of E exp(-t/x)."""
        nu = 0.0

        def body(x: float) -> float:
            return x**nu * math.exp(-x - t / x) / math.gamma(nu + 1.0)

        oracle = adaptive_quad(body, 0.0, 1.0, _ORACLE).value + adaptive_quad(
            body, 1.0, 80.0, _ORACLE
        ).value

        assert psi_N1_closed(nu, t).value == pytest.approx(oracle, rel=1e-9)

    def test_decreasing_and_log_convex(self) -> None:
        """Test monotonicity and log-convexity on a uniform grid."""
        grid = np.linspace(0.0, 4.0, 9)
        values = np.array([psi_N(BesselParams(nu=1.5, n=3, t=t)).value for t in grid])
        logs = np.log(values)

        assert np.all(np.diff(values) < 0.0)
        assert np.all(np.diff(logs, 2) >= -1e-8)

    def test_mean_inverse_eigenvalue(self) -> None:
        """Test (1 - psi_N(t))/t -> E[sum 1/(N x_j)] = 1/nu at small t."""
        nu, t = 3.0, 1e-4
        slope = (1.0 - psi_N(BesselParams(nu=nu, n=4, t=t)).value) / t

        assert slope == pytest.approx(1.0 / nu, rel=1e-3)

    def test_overshoot_beyond_error_raises(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test AccuracyError when the Gram determinant exceeds 1 beyond its error."""
        monkeypatch.setattr(laplace, "det_logspace", lambda gram: (1, 0.01))

        with pytest.raises(AccuracyError, match="exceeds 1"):
            psi_N(BesselParams(nu=1.0, n=2, t=0.5))

    def test_overshoot_within_error_rounds_to_one(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that an overshoot inside the error estimate gives exactly 1."""
        monkeypatch.setattr(laplace, "det_logspace", lambda gram: (1, 1e-15))

        assert psi_N(BesselParams(nu=1.0, n=2, t=0.5)).value == 1.0

    def test_closed_form_domain(self) -> None:
        """Test that the closed form rejects negative t."""
        with pytest.raises(DomainError, match="nonnegative"):
            psi_N1_closed(1.0, -1.0)
