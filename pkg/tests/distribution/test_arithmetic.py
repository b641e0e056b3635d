"""Tests for the arithmetic factor and the conjectured right-hand side."""

import math

import pytest

from rmtsums.distribution.arithmetic import arithmetic_factor, conjecture_rhs, primes_up_to
from rmtsums.distribution.moments import moment_R
from rmtsums.errors import DomainError


class TestPrimes:
    """Test the sieve."""

    def test_small_primes(self) -> None:
        """Test the primes below 30."""
        assert primes_up_to(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_prime_count(self) -> None:
        """Test pi(10^4) = 1229."""
        assert len(primes_up_to(10_000)) == 1229

    def test_below_two_is_empty(self) -> None:
        """Test that no primes lie below 2."""
        assert len(primes_up_to(1)) == 0


class TestArithmeticFactor:
    """Test the truncated Euler product."""

    @pytest.mark.parametrize("cutoff", [2, 100, 10_000])
    def test_s1_is_one(self, cutoff: int) -> None:
        """Test that every local factor is 1 at s=1."""
        result = arithmetic_factor(1, cutoff)

        assert result.value == 1.0
        assert result.err_est == 0.0

    def test_s2_cutoff_convergence(self) -> None:
        """Test that cutoffs 10^4 and 10^5 agree to 1e-6."""
        low = arithmetic_factor(2, 10_000).value
        high = arithmetic_factor(2, 100_000).value

        assert abs(low - high) < 1e-6

    def test_s2_is_inverse_zeta2(self) -> None:
        """Test a(2) = prod (1 - p^-2) = 6/pi^2."""
        result = arithmetic_factor(2, 100_000)

        assert result.value == pytest.approx(6.0 / math.pi**2, abs=1e-6)
        assert "tail_corrected" in result.flags

    def test_uncorrected_error_covers_tail(self) -> None:
        """Test that the uncorrected error estimate covers the omitted primes."""
        result = arithmetic_factor(2, 10_000, tail_correction=False)

        assert abs(result.value - 6.0 / math.pi**2) <= result.err_est

    def test_invalid_cutoff_raises(self) -> None:
        """Test that a cutoff below 2 raises DomainError."""
        with pytest.raises(DomainError, match="prime_cutoff"):
            arithmetic_factor(2, 1)


class TestConjectureRhs:
    """Test the conjectured leading coefficient."""

    @pytest.mark.parametrize("h", [0.0, 0.1, 0.3])
    def test_s0_reduction(self, h: float) -> None:
        """Test RHS = 2^{-2h} / cos(pi h) (log x)^{2h} at s=0."""
        x = 1e6
        expected = 2.0 ** (-2.0 * h) / math.cos(math.pi * h) * math.log(x) ** (2.0 * h)

        assert conjecture_rhs(0, h, x) == pytest.approx(expected, rel=1e-13)

    def test_s2_h0(self) -> None:
        """Test RHS = 2^4 a(2) R(2, 0) at x = e^2."""
        expected = 16.0 * arithmetic_factor(2, 10_000).value * moment_R(2, 0.0).value

        assert conjecture_rhs(2, 0.0, math.e**2, prime_cutoff=10_000) == pytest.approx(
            expected, rel=1e-12
        )

    def test_s1_h1(self) -> None:
        """Test RHS = 8/12 at s=1, h=1, x=e^2."""
        assert conjecture_rhs(1, 1.0, math.e**2) == pytest.approx(8.0 / 12.0, rel=1e-12)

    def test_h_outside_range_raises(self) -> None:
        """Test that negative h raises DomainError."""
        with pytest.raises(DomainError, match="h must lie"):
            conjecture_rhs(1, -0.1, 10.0)

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0, math.e])
    def test_x_at_most_e_raises(self, x: float) -> None:
        """Test that heights up to e are outside the domain."""
        with pytest.raises(DomainError, match="x must exceed e"):
            conjecture_rhs(1, 0.5, x)
