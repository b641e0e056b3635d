"""
Density rho^(s) of X(s) for integer s.

Integrating the composition series of phi^(s)(2u) against e^{ixu} term by
term gives

    rho^(s)(x) = (1/2pi) Re sum_k c_k(s) k! w^{k+1},   w = 2 / (1 - ix),

with c_k = V^(s) b_k(s) >= 0. At x = 0 every term is positive, and for any x
the k-th term is bounded in modulus by the k-th term at x = 0, so the x = 0
series majorizes the tail. s = 0 is the Cauchy density; s = 1 and s = 2 have
closed forms in elementary functions and 2F2.

For |x| beyond a few units the real part decays like |x|^{-2s-2} while the
individual terms only decay like |x|^{-1}; there the series is summed in
exact rational arithmetic and rounded once.
"""

import logging
import math
from dataclasses import replace
from fractions import Fraction

from rmtsums.charfn.series import normalized_coefficient
from rmtsums.distribution.config import DensityValue
from rmtsums.errors import AccuracyError, DomainError
from rmtsums.specfun.config import SeriesConfig, SeriesStopper
from rmtsums.specfun.hypergeometric import hyp_pfq

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

_EPS = 2.220446049250313e-16

# Beyond this |x| the series is summed exactly
EXACT_TAIL_FROM = 4.0


def rho(s: int, x: float, cfg: SeriesConfig = _DEFAULT_SERIES) -> DensityValue:
    """
    Density rho^(s)(x) of X(s).

    Parameters
    ----------
    s : int
        Nonnegative integer.
    x : float
        Point; the density is even.
    cfg : SeriesConfig
        Truncation policy for the series routes.

    Returns
    -------
    DensityValue
        ``"cauchy"`` for s = 0, ``"closed_s1"`` and ``"hyp_s2"`` for s = 1, 2
        with |x| <= 4, ``"general_series"`` otherwise.

    Raises
    ------
    DomainError
        If ``s`` is negative or not an integer.
    AccuracyError
        If a series does not settle within ``cfg.k_max`` terms.

    Examples
    --------
    >>> round(rho(0, 0.0).rho * math.pi, 12)
    1.0
    >>> round(rho(1, 0.0).rho * 2 * math.pi, 10) == round(math.e**2 - 1, 10)
    True
    """
    if s < 0 or int(s) != s:
        raise DomainError(f"s must be a nonnegative integer, got {s}")
    s = int(s)
    ax = abs(x)
    if s == 0:
        value = 1.0 / (math.pi * (1.0 + ax * ax))
        return DensityValue(x=x, rho=value, method="cauchy", err_est=2.0 * _EPS * value)
    # Evaluated at |x| so that rho(s, x) == rho(s, -x) bit for bit
    if s == 1 and ax <= EXACT_TAIL_FROM:
        result = _rho_closed_s1(ax)
    elif s == 2 and ax <= EXACT_TAIL_FROM:
        result = _rho_hyp_s2(ax, cfg)
    else:
        result = rho_series(s, ax, cfg)
    return replace(result, x=x)


def _rho_closed_s1(x: float) -> DensityValue:
    """(-1 + e^{2/(1+x^2)} cos(2x/(1+x^2))) / (2 pi)."""
    d = 1.0 + x * x
    u = 2.0 / d
    v = 2.0 * x / d
    # e^u cos v - 1 = expm1(u) cos v - 2 sin^2(v/2)
    value = (math.expm1(u) * math.cos(v) - 2.0 * math.sin(0.5 * v) ** 2) / (2.0 * math.pi)
    return DensityValue(
        x=x, rho=max(value, 0.0), method="closed_s1", err_est=8.0 * _EPS * math.exp(u)
    )


def _rho_hyp_s2(x: float, cfg: SeriesConfig) -> DensityValue:
    """(1/pi) Re[(1 - ix)^{-1} 2F2(5/2, 1; 5, 4; 8/(1 - ix))]."""
    w = 1.0 / complex(1.0, -x)
    hyp = hyp_pfq([2.5, 1.0], [5.0, 4.0], 8.0 * w, cfg)
    value = (w * complex(hyp.value)).real / math.pi
    err = (abs(w) * hyp.err_est + 4.0 * _EPS * math.exp(8.0 * abs(w))) / math.pi
    return DensityValue(x=x, rho=max(value, 0.0), method="hyp_s2", err_est=err)


def rho_series(s: int, x: float, cfg: SeriesConfig = _DEFAULT_SERIES) -> DensityValue:
    """
    Density from the general composition series, for any s >= 1.

    Complex floating point for |x| <= 4; exact Gaussian-rational summation
    beyond. The error estimate combines the geometric tail of the x = 0
    majorant with accumulated rounding.

    Raises
    ------
    DomainError
        If ``s < 1``.
    AccuracyError
        If the series does not settle within ``cfg.k_max`` terms.
    """
    if s < 1:
        raise DomainError(f"rho_series requires s >= 1, got {s}")
    if abs(x) <= EXACT_TAIL_FROM:
        value, err, terms = _sum_float(s, x, cfg)
    else:
        value, err, terms = _sum_exact(s, x, cfg)
    logger.debug("rho_series s=%d x=%.6g: %d terms, err %.2e", s, x, terms, err)
    return DensityValue(x=x, rho=max(value, 0.0), method="general_series", err_est=err)


def _majorant_coefficient(s: int, k: int) -> Fraction:
    """c_k k!, the x = 0 term without its power of 2."""
    return normalized_coefficient(s, k) * math.factorial(k)


def _tail(term: float, prev: float) -> float:
    ratio = term / prev if prev > 0.0 else 0.0
    return term * ratio / (1.0 - ratio) if ratio < 0.9 else 10.0 * term


def _sum_float(s: int, x: float, cfg: SeriesConfig) -> tuple[float, float, int]:
    w = 2.0 / complex(1.0, -x)
    power = w
    total = power
    magnitude = abs(total)
    prev = magnitude
    term_abs = magnitude
    stopper = SeriesStopper(cfg)
    for k in range(1, cfg.k_max):
        power *= w
        term = float(_majorant_coefficient(s, k)) * power
        total += term
        prev, term_abs = term_abs, abs(term)
        magnitude += term_abs
        if stopper.update(k, term, total):
            err = (_tail(term_abs, prev) + 4.0 * k * _EPS * magnitude) / (2.0 * math.pi)
            return total.real / (2.0 * math.pi), err, k + 1
    raise AccuracyError(
        f"density series for s={s}, x={x} did not converge in {cfg.k_max} terms",
        best_estimate=total.real / (2.0 * math.pi),
        err_est=term_abs,
    )


def _sum_exact(s: int, x: float, cfg: SeriesConfig) -> tuple[float, float, int]:
    # w = 2/(1 - ix) = 2q(q + ip)/(p^2 + q^2) for x = p/q
    fx = Fraction(x)
    p, q = fx.numerator, fx.denominator
    denom = p * p + q * q
    modulus = 2.0 / math.hypot(1.0, x)
    g_re, g_im = 1, 0
    scale = Fraction(1)
    total = Fraction(0)
    prev = 0.0
    term_abs = 0.0
    small_run = 0
    for k in range(cfg.k_max):
        g_re, g_im = g_re * q - g_im * p, g_re * p + g_im * q
        scale *= Fraction(2 * q, denom)
        a_k = _majorant_coefficient(s, k)
        total += a_k * scale * g_re
        prev, term_abs = term_abs, float(a_k) * modulus ** (k + 1)
        if term_abs < cfg.eps_rel * abs(float(total)) or term_abs == 0.0:
            small_run += 1
        else:
            small_run = 0
        if small_run >= 3 and k >= 10:
            value = float(total) / (2.0 * math.pi)
            err = _tail(term_abs, prev) / (2.0 * math.pi) + _EPS * abs(value)
            return value, err, k + 1
    raise AccuracyError(
        f"exact density series for s={s}, x={x} did not converge in {cfg.k_max} terms",
        best_estimate=float(total) / (2.0 * math.pi),
        err_est=term_abs,
    )
