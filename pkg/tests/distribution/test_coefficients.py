"""Tests for the rational coefficient expansion of R(s, h)."""

from fractions import Fraction

import pytest

from rmtsums.distribution.coefficients import (
    coeff_a,
    coeff_a_brute_force,
    coeff_a_from_series,
)
from rmtsums.errors import DomainError


class TestClosedCoefficients:
    """Test the closed rational forms."""

    @pytest.mark.parametrize("s", [1, 2, 7])
    def test_leading_coefficients(self, s: int) -> None:
        """Test a_0 = a_1 = 1."""
        assert coeff_a(s, 0) == 1
        assert coeff_a(s, 1) == 1

    def test_a2_at_s2(self) -> None:
        """Test a_2(2) = 14/15."""
        assert coeff_a(2, 2) == Fraction(14, 15)

    def test_a4_at_s2(self) -> None:
        """Test a_4(2) = 66/105."""
        assert coeff_a(2, 4) == Fraction(22, 35)

    def test_order_out_of_range_raises(self) -> None:
        """Test that k > 4 raises DomainError."""
        with pytest.raises(DomainError, match="k must lie"):
            coeff_a(3, 5)

    def test_small_s_for_high_order_raises(self) -> None:
        """Test that k >= 3 requires s >= 2."""
        with pytest.raises(DomainError, match="s >= 2"):
            coeff_a(1, 3)


class TestCoefficientExtraction:
    """Test the closed forms against the series coefficients."""

    @pytest.mark.parametrize("s", [2, 3, 5])
    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_closed_form_matches_series(self, s: int, k: int) -> None:
        """Test a_k(s) against the power-series determinant."""
        assert float(coeff_a_from_series(s, k)) == pytest.approx(float(coeff_a(s, k)), abs=1e-12)

    @pytest.mark.parametrize("s", [2, 3])
    @pytest.mark.parametrize("k", [0, 2, 4, 9])
    def test_series_matches_composition_sum(self, s: int, k: int) -> None:
        """Test the two exact coefficient routes against each other."""
        assert coeff_a_from_series(s, k) == coeff_a_brute_force(s, k)

    def test_s1_coefficients(self) -> None:
        """Test a_k(1) = 2^k / (k+1)!."""
        assert coeff_a_from_series(1, 3) == Fraction(8, 24)
