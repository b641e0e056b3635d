"""
Tests for differentiation, extrapolation, determinants, Laguerre helpers and
exact composition coefficients.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from rmtsums.errors import AccuracyError, DomainError, RangeError
from rmtsums.specfun import (
    DiffConfig,
    MemoizedFunction,
    composition_coefficient,
    compositions,
    derivative,
    det_logspace,
    determinant_series_coefficients,
    factorial_reciprocal_det,
    gauss_laguerre_rule,
    laguerre,
    log_derivatives,
    multinomial_count,
    neville_limit,
    orthonormal_laguerre_table,
    polynomial_limit,
    richardson_limit,
)


class TestDerivative:
    """Extrapolated finite differences."""

    @pytest.mark.parametrize("order, expected", [(1, math.cos(0.7)), (2, -math.sin(0.7))])
    def test_sine(self, order: int, expected: float) -> None:
        """Derivatives of sin at 0.7."""
        est = derivative(math.sin, 0.7, order)
        assert est.value == pytest.approx(expected, rel=1e-9)
        assert est.err_est < 1e-6

    def test_third_order(self) -> None:
        """Third derivative of exp."""
        assert derivative(math.exp, 0.3, 3).value == pytest.approx(math.exp(0.3), rel=1e-5)

    def test_invalid_order(self) -> None:
        """Orders outside 1..3 raise."""
        with pytest.raises(DomainError, match="order must be 1, 2 or 3"):
            derivative(math.sin, 0.0, 4)

    def test_step_too_small(self) -> None:
        """A step below the floor raises AccuracyError."""
        with pytest.raises(AccuracyError):
            derivative(math.sin, 0.0, 1, DiffConfig(), step=1e-12)

    def test_log_derivatives(self) -> None:
        """g = log f for f = exp(x^3): g' = 3x^2, g'' = 6x, g''' = 6."""
        estimates, step = log_derivatives(lambda x: math.exp(x**3), 0.5)
        assert [e.value for e in estimates] == pytest.approx([0.75, 3.0, 6.0], rel=1e-5)
        assert step > 0.0

    def test_memoized_function(self) -> None:
        """Repeated arguments are evaluated once."""
        calls = []

        def f(x: float) -> float:
            calls.append(x)
            return x * x

        memo = MemoizedFunction(f)
        assert memo(2.0) == memo(2.0) == 4.0
        assert memo.evaluations == 1
        assert calls == [2.0]


class TestExtrapolation:
    """Richardson, Neville and polynomial limits."""

    def test_richardson(self) -> None:
        """Geometric halving of an O(h) error."""
        assert richardson_limit(2.0, [1.5, 1.25, 1.125]) == pytest.approx(1.0, abs=1e-15)

    def test_neville_exact_for_polynomials(self) -> None:
        """A quadratic in 1/N extrapolates exactly with three sizes."""
        n_list = [4, 8, 16]
        nodes = [1.0 / n for n in n_list]
        values = [2.0 + 3.0 * x - 5.0 * x * x for x in nodes]
        result = neville_limit(nodes, values)
        assert result.value == pytest.approx(2.0, abs=1e-12)
        assert result.diagonal[0] == values[-1]
        assert len(result.diagonal) == 3

    def test_neville_monotone_flag(self) -> None:
        """Growing increments clear the monotone flag."""
        result = neville_limit([1.0, 0.5, 0.25], [0.0, 1.0, 1.0])
        assert result.monotone is False

    @pytest.mark.parametrize(
        "nodes, values, match",
        [
            ([1.0], [1.0], "at least two"),
            ([1.0, 1.0], [1.0, 2.0], "distinct nodes"),
            ([1.0, 0.5], [1.0], "differ in length"),
        ],
    )
    def test_neville_errors(self, nodes: list, values: list, match: str) -> None:
        """Malformed inputs raise."""
        with pytest.raises(DomainError, match=match):
            neville_limit(nodes, values)

    def test_polynomial_limit(self) -> None:
        """Intercept and slope of an exact cubic."""
        t = [0.02, 0.01, 0.005, 0.0025]
        y = [1.0 - 0.5 * x + 2.0 * x**3 for x in t]
        value, slope = polynomial_limit(t, y)
        assert value == pytest.approx(1.0, abs=1e-12)
        assert slope == pytest.approx(-0.5, abs=1e-8)

    def test_polynomial_limit_degree(self) -> None:
        """Degrees beyond the point count raise."""
        with pytest.raises(DomainError, match="unsupported"):
            polynomial_limit([0.1, 0.2], [1.0, 2.0], degree=3)


def _cofactor_det(rows: list[list[int]]) -> int:
    """Laplace expansion along the first row, in integers."""
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * _cofactor_det([r[:j] + r[j + 1 :] for r in rows[1:]])
        for j in range(len(rows))
        if rows[0][j]
    )


def _small_integer_matrices(size: int) -> list[np.ndarray]:
    """Every matrix with entries in -2..2 up to 2x2; a seeded sample plus singular ones above."""
    if size <= 2:
        entries = product(range(-2, 3), repeat=size * size)
        return [np.array(e, dtype=float).reshape(size, size) for e in entries]
    rng = np.random.default_rng(size)
    drawn = list(rng.integers(-2, 3, size=(2000, size, size)).astype(float))
    singular = []
    for m in drawn[:200]:
        repeated, zero_column = m.copy(), m.copy()
        repeated[-1] = -repeated[0]
        zero_column[:, 1] = 0.0
        singular += [repeated, zero_column]
    return drawn + singular


class TestDetLogspace:
    """Sign and log-modulus of determinants."""

    def test_negative_determinant(self) -> None:
        """Row swap flips the sign."""
        sign, log_abs = det_logspace([[0.0, 2.0], [3.0, 0.0]])
        assert sign == -1
        assert log_abs == pytest.approx(math.log(6.0))

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_matches_cofactor_expansion(self, size: int) -> None:
        """Small integer matrices, singular ones included, match the exact determinant."""
        for m in _small_integer_matrices(size):
            exact = _cofactor_det(m.astype(int).tolist())
            sign, log_abs = det_logspace(m)
            if exact == 0:
                # elimination may leave a pivot at rounding level
                assert sign == 0 or log_abs < math.log(1e-12)
            else:
                assert sign == (1 if exact > 0 else -1)
                assert log_abs == pytest.approx(math.log(abs(exact)), abs=1e-12)

    def test_hilbert(self) -> None:
        """The 3x3 Hilbert matrix has determinant 1/2160."""
        hilbert = [[1.0 / (i + j + 1) for j in range(3)] for i in range(3)]
        sign, log_abs = det_logspace(hilbert)
        assert sign == 1
        assert log_abs == pytest.approx(-math.log(2160.0), rel=1e-12)

    def test_huge_entries(self) -> None:
        """Scaled matrices stay finite in log space."""
        sign, log_abs = det_logspace(np.eye(20) * 1e30)
        assert sign == 1
        assert log_abs == pytest.approx(20 * 30 * math.log(10.0), rel=1e-12)

    @pytest.mark.parametrize("matrix", [np.zeros((2, 3)), np.zeros((0, 0))])
    def test_shape(self, matrix: np.ndarray) -> None:
        """Non-square or empty input raises."""
        with pytest.raises(DomainError, match="nonempty square"):
            det_logspace(matrix)

    def test_non_finite(self) -> None:
        """NaN entries raise."""
        with pytest.raises(DomainError, match="finite"):
            det_logspace([[1.0, math.nan], [0.0, 1.0]])

    def test_too_large(self) -> None:
        """Sizes beyond the supported bound raise RangeError."""
        with pytest.raises(RangeError):
            det_logspace(np.eye(65))


class TestLaguerre:
    """Laguerre polynomials and quadrature."""

    def test_closed_forms(self) -> None:
        """L_1^(a)(x) = 1 + a - x and L_2^(1)(0) = 3."""
        assert laguerre(1, 0.5, 2.0) == pytest.approx(-0.5)
        assert laguerre(2, 1.0, 0.0) == 3.0
        assert laguerre(0, 3.0, 9.0) == 1.0

    def test_orthonormality(self) -> None:
        """Gram matrix under the Gauss-Laguerre rule is the identity."""
        nodes, weights = gauss_laguerre_rule(12, 1.5)
        table = orthonormal_laguerre_table(5, 1.5, nodes)
        gram = (table * weights) @ table.T
        np.testing.assert_allclose(gram, np.eye(5), atol=1e-12)

    def test_rule_integrates_moments(self) -> None:
        """int y^3 y^a e^{-y} dy = Gamma(a + 4)."""
        nodes, weights = gauss_laguerre_rule(4, 0.5)
        assert float(np.sum(weights * nodes**3)) == pytest.approx(math.gamma(4.5), rel=1e-12)

    def test_alpha_domain(self) -> None:
        """alpha <= -1 raises."""
        with pytest.raises(DomainError, match="alpha must exceed -1"):
            orthonormal_laguerre_table(2, -1.0, np.array([1.0]))


class TestCompositions:
    """Exact composition-series coefficients."""

    def test_enumeration(self) -> None:
        """Weak compositions in lexicographic order, counted by a binomial."""
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert len(list(compositions(5, 3))) == multinomial_count(5, 3) == 21

    def test_reciprocal_det(self) -> None:
        """det[1/(i+j-1)!] for s=2 is 1/12."""
        assert factorial_reciprocal_det((0, 0)) == Fraction(1, 12)

    def test_s1_closed_form(self) -> None:
        """b_k(1) = 1/(k! (k+1)!)."""
        for k in range(6):
            expected = Fraction(1, math.factorial(k) * math.factorial(k + 1))
            assert composition_coefficient(1, k) == expected

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_determinant_route_matches(self, s: int) -> None:
        """The power-series determinant reproduces the composition sum."""
        fast = determinant_series_coefficients(s, 6)
        assert list(fast) == [composition_coefficient(s, k) for k in range(6)]

    def test_invalid(self) -> None:
        """Nonpositive s or count raise."""
        with pytest.raises(DomainError, match="s must be positive"):
            determinant_series_coefficients(0, 3)
        with pytest.raises(DomainError, match="k must be nonnegative"):
            list(compositions(-1, 2))
