"""Tests for the Bessel correlation kernel."""

import math

import pytest

from rmtsums.bessel.kernel import bessel_kernel, bessel_kernel_diagonal
from rmtsums.errors import DomainError


class TestBesselKernel:
    """Test symmetry, diagonal limit and asymptotics."""

    @pytest.mark.parametrize(("x", "y"), [(0.5, 3.0), (10.0, 2.0), (40.0, 41.5)])
    def test_symmetric(self, x: float, y: float) -> None:
        """Test K(x, y) = K(y, x)."""
        assert bessel_kernel(1.5, x, y) == pytest.approx(bessel_kernel(1.5, y, x), rel=1e-13)

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 2.0])
    @pytest.mark.parametrize("x", [0.7, 5.0, 30.0])
    def test_diagonal_limit(self, nu: float, x: float) -> None:
        """Test that the divided difference approaches the diagonal formula."""
        d = 1e-5

        assert bessel_kernel(nu, x - d, x + d) == pytest.approx(
            bessel_kernel_diagonal(nu, x), abs=1e-9
        )

    def test_near_diagonal_branch(self) -> None:
        """Test that points closer than the threshold use the diagonal value."""
        assert bessel_kernel(1.0, 2.0, 2.0) == bessel_kernel_diagonal(1.0, 2.0)

    def test_density_asymptotics(self) -> None:
        """Test K(x, x) ~ 1/(2 pi sqrt x) far from the hard edge."""
        x = 1e4

        assert bessel_kernel_diagonal(0.5, x) == pytest.approx(
            1.0 / (2.0 * math.pi * math.sqrt(x)), rel=5e-2
        )

    def test_positive_points_required(self) -> None:
        """Test that nonpositive points raise DomainError."""
        with pytest.raises(DomainError, match="positive"):
            bessel_kernel(1.0, 0.0, 1.0)
