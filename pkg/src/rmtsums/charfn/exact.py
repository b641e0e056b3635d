"""
Limit characteristic function phi^(s)(t) = E exp(itX(s)/2) for integer s.

s = 0 is the Cauchy case e^{-|t|/2}. For s >= 1 the function is the Bessel
determinant

    phi^(s)(t) = V^(s) det[I_{j+k+1}(2 sqrt|t|)]_{j,k<s} / (e^{|t|/2} |t|^{s^2/2}),

which cancels badly as t -> 0; below ``cfg.t_switch`` the composition
series takes over.
"""

import logging
import math

import numpy as np
from scipy import special

from rmtsums.charfn.config import CharFnValue
from rmtsums.charfn.series import phi_series, prefactor_v
from rmtsums.errors import ConsistencyError, DomainError
from rmtsums.specfun.bessel import bessel_i
from rmtsums.specfun.config import SeriesConfig
from rmtsums.specfun.linalg import det_logspace

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

# bessel_i is certified on [0, 50]; larger arguments use scaled scipy values
_SERIES_BESSEL_MAX_ARG = 50.0
_EPS = 2.220446049250313e-16


def _scaled_bessel_i(order: int, x: float, cfg: SeriesConfig) -> float:
    """e^{-x} I_n(x)."""
    if x <= _SERIES_BESSEL_MAX_ARG:
        return bessel_i(order, x, cfg) * math.exp(-x)
    return float(special.ive(order, x))


def phi_exact(s: int, t: float, cfg: SeriesConfig = _DEFAULT_SERIES) -> CharFnValue:
    """
    Characteristic function phi^(s)(t) of X(s) at t/2.

    Parameters
    ----------
    s : int
        Nonnegative integer.
    t : float
        Argument.
    cfg : SeriesConfig
        Truncation policy and series/determinant switchover.

    Returns
    -------
    CharFnValue
        Value in (0, 1], tagged ``closed_form_s0``, ``small_t_series`` or
        ``bessel_det``.

    Raises
    ------
    DomainError
        If ``s`` is negative or not an integer.
    ConsistencyError
        If the Bessel determinant has the wrong sign.

    Examples
    --------
    >>> phi_exact(0, 3.0).value == math.exp(-1.5)
    True
    """
    if s < 0 or int(s) != s:
        raise DomainError(f"phi_exact requires a nonnegative integer s, got {s}")
    s = int(s)
    a = abs(t)
    if s == 0:
        return CharFnValue(t=t, value=math.exp(-0.5 * a), method="closed_form_s0", err_est=0.0)
    if a < cfg.t_switch:
        return phi_series(s, t, cfg)

    # Scaled Bessel values e^{-x} I_n(x) keep the matrix O(1); the scale
    # factors e^{s x} come back in log space.
    x = 2.0 * math.sqrt(a)
    scaled = [_scaled_bessel_i(n, x, cfg) for n in range(1, 2 * s)]
    matrix = np.array([[scaled[j + k] for k in range(s)] for j in range(s)])
    sign, log_abs = det_logspace(matrix)
    v = prefactor_v(s)
    if sign * (1 if v > 0 else -1) <= 0:
        raise ConsistencyError(f"Bessel determinant has wrong sign for s={s}, t={t}")

    log_value = math.log(abs(v)) + log_abs + s * x - 0.5 * a - 0.5 * s * s * math.log(a)
    value = math.exp(log_value)
    cond = float(np.linalg.cond(matrix))
    logger.debug("phi_exact s=%d t=%.6g: Bessel det cond=%.3e", s, t, cond)
    return CharFnValue(t=t, value=value, method="bessel_det", err_est=value * cond * 8.0 * _EPS)
