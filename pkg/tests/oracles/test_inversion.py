"""
Tests for Fourier inversion of the limiting characteristic function.
"""

import math

import pytest

from rmtsums.distribution import rho
from rmtsums.errors import DomainError
from rmtsums.oracles import (
    density_by_inversion,
    fourier_cutoff,
    moment_by_quadrature,
    probability_mass_by_inversion,
)


class TestFourierCutoff:
    """Tail truncation point."""

    def test_cauchy(self) -> None:
        """phi^(0)(2T) = e^{-T} drops below abs_tol / 10."""
        cutoff = fourier_cutoff(0)
        assert math.exp(-cutoff) < 1e-9


class TestDensityByInversion:
    """Inverted density against the direct evaluators."""

    @pytest.mark.parametrize("x", [0.0, 0.5, 2.0])
    def test_cauchy(self, x: float) -> None:
        """s = 0 gives 1/(pi (1 + x^2))."""
        expected = 1.0 / (math.pi * (1.0 + x * x))
        assert density_by_inversion(0, x) == pytest.approx(expected, rel=1e-7)

    @pytest.mark.parametrize("s, x", [(1, 0.0), (1, 0.8), (2, 0.3)])
    def test_against_rho(self, s: int, x: float) -> None:
        """Inversion agrees with the closed-form and series densities."""
        assert density_by_inversion(s, x) == pytest.approx(rho(s, x).rho, rel=1e-6)

    def test_probability_mass_cauchy(self) -> None:
        """P(|X(0)| <= 1) = 1/2."""
        assert probability_mass_by_inversion(0, 1.0) == pytest.approx(0.5, abs=1e-7)

    def test_probability_mass_domain(self) -> None:
        """Nonpositive half-widths raise."""
        with pytest.raises(DomainError, match="half_width must be positive"):
            probability_mass_by_inversion(1, 0.0)


class TestMomentByQuadrature:
    """Absolute moments by integrating the density."""

    def test_cauchy(self) -> None:
        """E|X(0)|^{1/2} = 1/cos(pi/4)."""
        assert moment_by_quadrature(0, 0.25) == pytest.approx(math.sqrt(2.0), rel=1e-7)

    def test_custom_density(self) -> None:
        """An explicit density overrides the default."""
        value = moment_by_quadrature(0, 0.25, density=lambda x: 1.0 / (math.pi * (1.0 + x * x)))
        assert value == pytest.approx(math.sqrt(2.0), rel=1e-7)

    def test_strip(self) -> None:
        """h outside (-1/2, s + 1/2) raises."""
        with pytest.raises(DomainError, match="h must lie in"):
            moment_by_quadrature(0, 0.5)
