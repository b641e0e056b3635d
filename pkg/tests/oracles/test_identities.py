"""
Tests for the Selberg, Aomoto and N=1 Fourier identities.
"""

import math

import pytest
from scipy import special

from rmtsums.errors import DomainError, RangeError
from rmtsums.oracles import (
    aomoto,
    aomoto_by_quadrature,
    laguerre_selberg_log,
    log_selberg_norm,
    selberg_by_quadrature,
    selberg_norm,
    winn_identity_check_N1,
)


class TestSelberg:
    """Hua-Pickrell normalizer."""

    @pytest.mark.parametrize("s", [0.0, 0.5, 1.0, 2.3])
    def test_n1_closed_form(self, s: float) -> None:
        """int cos^{2s} = sqrt(pi) Gamma(s+1/2)/Gamma(s+1)."""
        expected = math.sqrt(math.pi) * math.gamma(s + 0.5) / math.gamma(s + 1.0)
        assert selberg_norm(1, s) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("n, s", [(1, 0.7), (2, 0.0), (2, 1.0), (2, 1.5)])
    def test_against_quadrature(self, n: int, s: float) -> None:
        """Brute-force integration agrees for N <= 2."""
        assert selberg_by_quadrature(n, s) == pytest.approx(selberg_norm(n, s), rel=1e-6)

    def test_log_consistent(self) -> None:
        """selberg_norm is exp of log_selberg_norm."""
        assert math.log(selberg_norm(4, 1.2)) == pytest.approx(log_selberg_norm(4, 1.2))

    def test_domain(self) -> None:
        """s <= -1/2 and N < 1 raise."""
        with pytest.raises(DomainError, match="s must exceed -1/2"):
            log_selberg_norm(2, -0.5)
        with pytest.raises(DomainError, match="N must be positive"):
            log_selberg_norm(0, 1.0)

    def test_brute_force_range(self) -> None:
        """N = 3 is out of range for brute force."""
        with pytest.raises(RangeError, match="N <= 2"):
            selberg_by_quadrature(3, 1.0)


class TestAomoto:
    """Laguerre Selberg integral with linear factors."""

    def test_small_values(self) -> None:
        """a_{1,1}^(1) = 1 and a_{1,0}^(alpha) = Gamma(alpha)."""
        assert aomoto(1, 1, 1.0) == pytest.approx(1.0)
        assert aomoto(1, 0, 2.5) == pytest.approx(math.gamma(2.5), rel=1e-14)

    def test_laguerre_selberg_n2(self) -> None:
        """int (y1-y2)^2 e^{-y1-y2} = 2."""
        assert math.exp(laguerre_selberg_log(2, 0.0)) == pytest.approx(2.0, rel=1e-14)

    @pytest.mark.parametrize("n, k, alpha", [(1, 1, 1.5), (2, 0, 1.0), (2, 1, 1.5), (2, 2, 2.0)])
    def test_against_quadrature(self, n: int, k: int, alpha: float) -> None:
        """Brute-force integration agrees for N <= 2."""
        expected = aomoto(n, k, alpha)
        assert aomoto_by_quadrature(n, k, alpha) == pytest.approx(expected, rel=1e-6)

    @pytest.mark.parametrize(
        "n, k, alpha, match",
        [(2, 3, 1.0, "k must lie in"), (2, 1, 0.0, "alpha must be positive")],
    )
    def test_domain(self, n: int, k: int, alpha: float, match: str) -> None:
        """k outside [0, N] and alpha <= 0 raise."""
        with pytest.raises(DomainError, match=match):
            aomoto(n, k, alpha)


class TestWinnIdentity:
    """N = 1 Fourier identity."""

    def test_s0(self) -> None:
        """At s = 0 both sides equal pi e^{-t}."""
        check = winn_identity_check_N1(0.0, 1.0)
        assert check.lhs.real == pytest.approx(math.pi / math.e, rel=1e-8)
        assert check.rhs == pytest.approx(math.pi / math.e, rel=1e-8)

    @pytest.mark.parametrize("s, t", [(1.0, 0.5), (1.5, 2.0), (0.25, 3.0)])
    def test_gap(self, s: float, t: float) -> None:
        """Both sides agree to quadrature accuracy."""
        assert winn_identity_check_N1(s, t).rel_gap < 1e-7

    def test_s1_closed_form(self) -> None:
        """int e^{itx}(1+x^2)^{-2} dx = pi/2 (1+t) e^{-t}."""
        t = 1.3
        check = winn_identity_check_N1(1.0, t)
        assert check.rhs == pytest.approx(0.5 * math.pi * (1.0 + t) * math.exp(-t), rel=1e-8)

    def test_bessel_form(self) -> None:
        """For general s the lhs is a modified Bessel K expression."""
        s, t = 0.75, 1.1
        expected = (
            2.0
            * math.sqrt(math.pi)
            / math.gamma(s + 1.0)
            * (t / 2.0) ** (s + 0.5)
            * special.kv(s + 0.5, t)
        )
        assert winn_identity_check_N1(s, t).lhs.real == pytest.approx(expected, rel=1e-7)

    def test_domain(self) -> None:
        """t <= 0 and s <= -1/2 raise."""
        with pytest.raises(DomainError, match="t must be positive"):
            winn_identity_check_N1(1.0, 0.0)
        with pytest.raises(DomainError, match="s must exceed -1/2"):
            winn_identity_check_N1(-0.5, 1.0)
