"""
Special functions and small linear algebra.

Gamma, Barnes G and Pochhammer symbols, Bessel I and J series, Laguerre
polynomials, generalized hypergeometric series, log-space determinants,
compositions and the exact composition coefficients, Richardson-extrapolated
differentiation and limit extrapolation.
"""

from rmtsums.specfun.bessel import BESSEL_J_MAX_ARG, bessel_i, bessel_j
from rmtsums.specfun.combinatorics import (
    composition_coefficient,
    composition_coefficients,
    compositions,
    determinant_series_coefficients,
    factorial_reciprocal_det,
    multinomial_count,
)
from rmtsums.specfun.config import DiffConfig, EvalResult, SeriesConfig, SeriesStopper
from rmtsums.specfun.differentiation import (
    DerivativeEstimate,
    MemoizedFunction,
    derivative,
    log_derivatives,
)
from rmtsums.specfun.extrapolation import (
    ExtrapolationResult,
    neville_limit,
    polynomial_limit,
    richardson_limit,
)
from rmtsums.specfun.gamma import (
    barnes_g,
    log_barnes_g,
    log_gamma,
    pochhammer,
    pochhammer_neg2h_deriv,
)
from rmtsums.specfun.hypergeometric import hyp_pfq
from rmtsums.specfun.linalg import det_logspace
from rmtsums.specfun.orthopoly import (
    gauss_laguerre_rule,
    laguerre,
    laguerre_log_norms,
    orthonormal_laguerre_table,
)

__all__ = [
    "BESSEL_J_MAX_ARG",
    "DerivativeEstimate",
    "DiffConfig",
    "EvalResult",
    "ExtrapolationResult",
    "MemoizedFunction",
    "SeriesConfig",
    "SeriesStopper",
    "barnes_g",
    "bessel_i",
    "bessel_j",
    "composition_coefficient",
    "composition_coefficients",
    "compositions",
    "derivative",
    "det_logspace",
    "determinant_series_coefficients",
    "factorial_reciprocal_det",
    "gauss_laguerre_rule",
    "hyp_pfq",
    "laguerre",
    "laguerre_log_norms",
    "log_barnes_g",
    "log_derivatives",
    "log_gamma",
    "multinomial_count",
    "neville_limit",
    "orthonormal_laguerre_table",
    "pochhammer",
    "pochhammer_neg2h_deriv",
    "polynomial_limit",
    "richardson_limit",
]
