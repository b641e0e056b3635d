"""
Tests for the adaptive quadrature wrappers and Hankel moments.
"""

import math

import numpy as np
import pytest

from rmtsums.errors import AccuracyError, DomainError
from rmtsums.oracles import (
    QuadConfig,
    adaptive_quad,
    adaptive_quad_vec,
    hankel_logdet,
    hankel_moment,
    laguerre_selberg_log,
)


class TestQuadConfig:
    """Tolerance policy validation."""

    def test_defaults(self) -> None:
        """1e-8 tolerances, 500 subdivisions."""
        cfg = QuadConfig()
        assert (cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions) == (1e-8, 1e-8, 500)

    @pytest.mark.parametrize(
        "kwargs, match",
        [
            ({"abs_tol": 0.0}, "abs_tol must be in"),
            ({"rel_tol": 1e-3}, "rel_tol must be in"),
            ({"max_subdivisions": 0}, "max_subdivisions must be positive"),
            ({"upper_cutoff": -1.0}, "upper_cutoff must be positive"),
        ],
    )
    def test_invalid(self, kwargs: dict, match: str) -> None:
        """Out-of-range fields raise."""
        with pytest.raises(ValueError, match=match):
            QuadConfig(**kwargs)


class TestAdaptiveQuad:
    """Scalar and vector Gauss-Kronrod integration."""

    def test_exponential(self) -> None:
        """int_0^inf e^{-y} dy = 1."""
        result = adaptive_quad(lambda y: math.exp(-y), 0.0, np.inf)
        assert result.value == pytest.approx(1.0, rel=1e-10)
        assert result.err_est < 1e-8

    def test_cosine_weight(self) -> None:
        """int_0^inf cos(x)/(1+x^2) dx = pi/(2e) by the Fourier rule."""
        result = adaptive_quad(lambda x: 1.0 / (1.0 + x * x), 0.0, np.inf, weight="cos", wvar=1.0)
        assert result.value == pytest.approx(math.pi / (2.0 * math.e), rel=1e-8)

    def test_algebraic_weight(self) -> None:
        """int_0^1 x^{-1/2} dx = 2 with the algebraic endpoint weight."""
        result = adaptive_quad(lambda x: 1.0, 0.0, 1.0, weight="alg", wvar=(-0.5, 0.0))
        assert result.value == pytest.approx(2.0, rel=1e-12)

    def test_divergent_raises(self) -> None:
        """A divergent integral fails with the best estimate attached."""
        with pytest.raises(AccuracyError, match="quadrature on") as info:
            adaptive_quad(lambda x: 1.0 / x if x > 0.0 else 1e300, 0.0, 1.0)
        assert info.value.best_estimate is not None

    def test_vector(self) -> None:
        """One pass integrates every component."""
        value, err = adaptive_quad_vec(lambda x: np.array([1.0, x, x * x]), 0.0, 1.0)
        np.testing.assert_allclose(value, [1.0, 0.5, 1.0 / 3.0], rtol=1e-12)
        assert err < 1e-8


class TestHankelMoment:
    """Moments of (y+t)^lambda y^alpha e^{-y}."""

    def test_shifted(self) -> None:
        """int (y+1) e^{-y} dy = 2."""
        assert hankel_moment(0, 0, 1.0, 0.0, 1.0) == pytest.approx(2.0, rel=1e-10)

    def test_closed_form_at_zero(self) -> None:
        """At t = 0 the moment is Gamma(j+k+alpha+lambda+1)."""
        assert hankel_moment(1, 1, 0.0, 0.5, 0.0) == pytest.approx(math.gamma(3.5), rel=1e-14)

    def test_negative_alpha(self) -> None:
        """int y^{-1/2} (y + 1/2) e^{-y} dy = sqrt(pi)."""
        value = hankel_moment(0, 0, 0.5, -0.5, 1.0)
        assert value == pytest.approx(math.sqrt(math.pi), rel=1e-9)

    @pytest.mark.parametrize(
        "kwargs, match",
        [
            ({"alpha": -1.0}, "alpha must exceed -1"),
            ({"t": -0.1}, "t must be nonnegative"),
            ({"t": 0.0, "lam": -3.0}, "moment diverges"),
        ],
    )
    def test_domain(self, kwargs: dict, match: str) -> None:
        """Invalid exponents and shifts raise."""
        args = {"j": 0, "k": 0, "t": 1.0, "alpha": 0.0, "lam": 1.0} | kwargs
        with pytest.raises(DomainError, match=match):
            hankel_moment(**args)


class TestHankelLogdet:
    """log det of Hankel moment matrices."""

    @pytest.mark.parametrize("n, alpha", [(1, 0.0), (3, 0.5), (5, 2.0)])
    def test_laguerre_weight(self, n: int, alpha: float) -> None:
        """With lambda = 0 the determinant is prod j! Gamma(j+alpha+1)."""
        expected = laguerre_selberg_log(n, alpha) - math.lgamma(n + 1.0)
        assert hankel_logdet(n, 0.0, alpha, 0.0) == pytest.approx(expected, rel=1e-12)

    def test_against_moment_matrix(self) -> None:
        """Agrees with slogdet of the moment matrix at small n."""
        n, t, alpha, lam = 3, 1.0, 0.5, 1.5
        matrix = np.array(
            [[hankel_moment(j, k, t, alpha, lam) for k in range(n)] for j in range(n)]
        )
        sign, expected = np.linalg.slogdet(matrix)
        assert sign > 0
        assert hankel_logdet(n, t, alpha, lam) == pytest.approx(expected, rel=1e-7)
