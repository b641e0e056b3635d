"""
Small-t composition series of the explicit characteristic function.

e^{|t|/2} phi^(s)(t) = sum_k c_k(s) |t|^k with c_k = V^(s) b_k(s), where
V^(s) = (-1)^{s(s-1)/2} G(2s+1) / G(s+1)^2. All c_k are nonnegative
rationals and c_0 = 1, so the partial sums increase monotonically.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from rmtsums.charfn.config import CharFnValue
from rmtsums.errors import AccuracyError, DomainError
from rmtsums.specfun.combinatorics import determinant_series_coefficients
from rmtsums.specfun.config import SeriesConfig, SeriesStopper

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

# Coefficient tables grow in blocks so the cache is reused across calls
_BLOCK = 64


def _barnes_g_integer(n: int) -> int:
    """G(n) = prod_{k=1}^{n-2} k! for integer n >= 1."""
    value = 1
    for k in range(1, n - 1):
        value *= math.factorial(k)
    return value


@lru_cache(maxsize=None)
def prefactor_v(s: int) -> Fraction:
    """
    Exact prefactor V^(s) = (-1)^{s(s-1)/2} G(2s+1) / G(s+1)^2.

    Examples
    --------
    >>> prefactor_v(2)
    Fraction(-12, 1)
    """
    if s < 0:
        raise DomainError(f"s must be nonnegative, got {s}")
    sign = -1 if (s * (s - 1) // 2) % 2 else 1
    return Fraction(sign * _barnes_g_integer(2 * s + 1), _barnes_g_integer(s + 1) ** 2)


def normalized_coefficients(s: int, count: int) -> tuple[Fraction, ...]:
    """c_0(s), ..., c_{count-1}(s)."""
    if s < 1:
        raise DomainError(f"coefficients require s >= 1, got {s}")
    size = _BLOCK * (1 + (count - 1) // _BLOCK)
    return _coefficient_block(s, size)[:count]


@lru_cache(maxsize=None)
def _coefficient_block(s: int, size: int) -> tuple[Fraction, ...]:
    v = prefactor_v(s)
    return tuple(v * b for b in determinant_series_coefficients(s, size))


def normalized_coefficient(s: int, k: int) -> Fraction:
    """c_k(s) = V^(s) b_k(s); c_0 = 1 and c_k = 1/(k!(k+1)!) for s = 1."""
    return normalized_coefficients(s, k + 1)[k]


def phi_series(s: int, t: float, cfg: SeriesConfig = _DEFAULT_SERIES) -> CharFnValue:
    """
    phi^(s)(t) from the composition series.

    Parameters
    ----------
    s : int
        Positive integer.
    t : float
        Argument; the series is even in t.
    cfg : SeriesConfig
        Truncation policy.

    Returns
    -------
    CharFnValue
        Method ``"small_t_series"``; err_est bounds the tail by the last
        term times a geometric factor from the term ratio.

    Raises
    ------
    DomainError
        If ``s < 1``.
    AccuracyError
        If the series has not settled after ``cfg.k_max`` terms.
    """
    if s < 1:
        raise DomainError(f"phi_series requires s >= 1, got {s}")
    a = abs(t)
    damping = math.exp(-0.5 * a)
    if a == 0.0:
        return CharFnValue(t=t, value=1.0, method="small_t_series", err_est=0.0)

    total = 1.0
    power = 1.0
    term = 1.0
    prev = 1.0
    stopper = SeriesStopper(cfg)
    for k in range(1, cfg.k_max):
        power *= a
        prev = term
        term = float(normalized_coefficient(s, k)) * power
        total += term
        if stopper.update(k, term, total):
            ratio = term / prev if prev > 0.0 else 0.0
            tail = term * ratio / (1.0 - ratio) if ratio < 0.9 else 10.0 * term
            logger.debug("phi_series s=%d t=%.6g converged after %d terms", s, t, k + 1)
            return CharFnValue(
                t=t,
                value=damping * total,
                method="small_t_series",
                err_est=damping * (tail + 4.0 * k * 2.2e-16 * total),
            )

    raise AccuracyError(
        f"phi_series(s={s}, t={t}) did not converge in {cfg.k_max} terms",
        best_estimate=damping * total,
        err_est=damping * term,
    )
