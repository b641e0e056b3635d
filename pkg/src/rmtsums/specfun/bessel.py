"""
Bessel functions by power series.

I_n on [0, 50] and J_nu on (0, 20] cover every argument the kernels and
explicit characteristic functions need.
"""

import logging
import math

from rmtsums.errors import AccuracyError, DomainError, RangeError
from rmtsums.specfun.config import SeriesConfig, SeriesStopper

logger = logging.getLogger(__name__)

BESSEL_J_MAX_ARG = 20.0

_DEFAULT_SERIES = SeriesConfig()


def bessel_i(order: int, x: float, cfg: SeriesConfig = _DEFAULT_SERIES) -> float:
    """
    Modified Bessel function I_n(x) of nonnegative integer order.

    Sums (x/2)^{2k+n} / (k! (k+n)!) with the term-ratio recursion.

    Parameters
    ----------
    order : int
        Nonnegative integer order n.
    x : float
        Nonnegative argument.
    cfg : SeriesConfig
        Truncation policy.

    Returns
    -------
    float
        I_n(x).

    Raises
    ------
    DomainError
        If ``order`` or ``x`` is negative.
    AccuracyError
        If the series does not settle within ``cfg.k_max`` terms.
    """
    if order < 0:
        raise DomainError(f"bessel_i order must be nonnegative, got {order}")
    if x < 0:
        raise DomainError(f"bessel_i argument must be nonnegative, got {x}")
    if x == 0.0:
        return 1.0 if order == 0 else 0.0

    half = 0.5 * x
    quarter_sq = half * half
    term = math.exp(order * math.log(half) - math.lgamma(order + 1))
    total = term
    stopper = SeriesStopper(cfg)
    for k in range(1, cfg.k_max):
        term *= quarter_sq / (k * (k + order))
        total += term
        if stopper.update(k, term, total):
            return total
    raise AccuracyError(
        f"bessel_i({order}, {x}) did not converge in {cfg.k_max} terms",
        best_estimate=total,
        err_est=abs(term),
    )


def bessel_j(
    order: float,
    x: float,
    cfg: SeriesConfig = _DEFAULT_SERIES,
    max_arg: float = BESSEL_J_MAX_ARG,
) -> float:
    """
    Bessel function of the first kind J_nu(x) for real order nu > -1.

    Parameters
    ----------
    order : float
        Real order greater than -1.
    x : float
        Positive argument, at most ``max_arg``.
    cfg : SeriesConfig
        Truncation policy.
    max_arg : float, default 20
        Largest argument accepted; the alternating series loses digits beyond it.

    Returns
    -------
    float
        J_nu(x).

    Raises
    ------
    DomainError
        If ``order <= -1`` or ``x <= 0``.
    RangeError
        If ``x > max_arg``.
    """
    if not order > -1.0:
        raise DomainError(f"bessel_j order must exceed -1, got {order}")
    if not x > 0.0:
        raise DomainError(f"bessel_j argument must be positive, got {x}")
    if x > max_arg:
        raise RangeError(f"bessel_j argument {x} exceeds series bound {max_arg}")

    half = 0.5 * x
    quarter_sq = half * half
    term = math.exp(order * math.log(half) - math.lgamma(order + 1.0))
    total = term
    stopper = SeriesStopper(cfg)
    for k in range(1, cfg.k_max):
        term *= -quarter_sq / (k * (k + order))
        total += term
        if stopper.update(k, term, total):
            return total
    raise AccuracyError(
        f"bessel_j({order}, {x}) did not converge in {cfg.k_max} terms",
        best_estimate=total,
        err_est=abs(term),
    )
