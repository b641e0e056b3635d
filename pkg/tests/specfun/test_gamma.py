"""
Tests for gamma, Barnes G and Pochhammer helpers.
"""

import math

import mpmath
import pytest

from rmtsums.errors import DomainError
from rmtsums.specfun import (
    barnes_g,
    log_barnes_g,
    log_gamma,
    pochhammer,
    pochhammer_neg2h_deriv,
)


class TestLogGamma:
    """Principal-branch log Gamma."""

    def test_integer(self) -> None:
        """log Gamma(5) = log 24."""
        assert log_gamma(5).real == pytest.approx(math.log(24.0), rel=1e-14)

    def test_complex_against_mpmath(self) -> None:
        """Off-axis values agree with mpmath."""
        z = 1.3 + 2.7j
        expected = complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))
        assert abs(log_gamma(z) - expected) < 1e-12

    def test_left_half_plane_rejected(self) -> None:
        """Re z <= 0 is outside the supported domain."""
        with pytest.raises(DomainError, match="Re z > 0"):
            log_gamma(-0.5 + 1j)


class TestBarnesG:
    """Barnes G on the positive axis."""

    @pytest.mark.parametrize(
        "z, expected", [(1, 1.0), (2, 1.0), (3, 1.0), (4, 2.0), (5, 12.0), (6, 288.0)]
    )
    def test_integers(self, z: int, expected: float) -> None:
        """G(n) = prod_{k<n-1} k!."""
        assert barnes_g(z) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("z", [0.5, 1.5, 2.5, 0.3, 1.7, 3.25, 7.9])
    def test_against_mpmath(self, z: float) -> None:
        """Half-integer and generic points agree with mpmath."""
        expected = float(mpmath.log(mpmath.barnesg(z)))
        assert log_barnes_g(z) == pytest.approx(expected, abs=1e-12)

    def test_recurrence(self) -> None:
        """G(z + 1) = Gamma(z) G(z)."""
        z = 2.37
        lhs = log_barnes_g(z + 1.0)
        rhs = math.lgamma(z) + log_barnes_g(z)
        assert lhs == pytest.approx(rhs, abs=1e-12)

    @pytest.mark.parametrize("z", [0.0, -1.5])
    def test_nonpositive_rejected(self, z: float) -> None:
        """z <= 0 raises."""
        with pytest.raises(DomainError, match="z > 0"):
            log_barnes_g(z)


class TestPochhammer:
    """Rising factorials."""

    def test_values(self) -> None:
        """(3)_2 = 12, (a)_0 = 1, (-2)_3 = 0."""
        assert pochhammer(3, 2) == 12.0
        assert pochhammer(0.7, 0) == 1.0
        assert pochhammer(-2.0, 3) == 0.0

    def test_negative_length(self) -> None:
        """Negative lengths raise."""
        with pytest.raises(DomainError, match="nonnegative"):
            pochhammer(1.0, -1)

    @pytest.mark.parametrize("k, expected", [(0, 0.0), (1, -2.0), (2, 2.0), (4, 4.0), (5, 12.0)])
    def test_neg2h_derivative_at_half(self, k: int, expected: float) -> None:
        """At h = 1/2 the derivative is 0, -2 and 2(k-2)!."""
        assert pochhammer_neg2h_deriv(0, k) == expected

    def test_neg2h_derivative_numeric(self) -> None:
        """Matches a central difference of (-2h)_k at h = 3/2."""
        step = 1e-6
        k = 5
        numeric = (pochhammer(-2.0 * (1.5 + step), k) - pochhammer(-2.0 * (1.5 - step), k)) / (
            2.0 * step
        )
        assert pochhammer_neg2h_deriv(1, k) == pytest.approx(numeric, rel=1e-6)
