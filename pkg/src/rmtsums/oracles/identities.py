"""
Closed-form ensemble integrals and their brute-force quadrature checks.

Covers the Hua-Pickrell normalizer, Aomoto's extension of the Laguerre
Selberg integral and the one-dimensional case of Winn's Fourier identity,
which turns the Hua-Pickrell characteristic function into a deformed
Laguerre integral.
"""

import logging
import math
from typing import NamedTuple

import numpy as np
from scipy import integrate

from rmtsums.errors import DomainError, RangeError
from rmtsums.oracles.config import QuadConfig
from rmtsums.oracles.moments import hankel_moment
from rmtsums.oracles.quadrature import adaptive_quad

logger = logging.getLogger(__name__)

_DEFAULT_QUAD = QuadConfig()

# Brute-force oracles integrate the joint density directly
MAX_BRUTE_FORCE_N = 2


class WinnCheck(NamedTuple):
    """Both sides of the N = 1 Fourier identity and their relative gap."""

    lhs: complex
    rhs: float
    rel_gap: float


def laguerre_selberg_log(n: int, a: float) -> float:
    """
    log of int_{(0,inf)^n} Delta(y)^2 prod y_j^a e^{-y_j} dy.

    Equals log n! + sum_{j=1}^n [log Gamma(j) + log Gamma(a + j)].

    Parameters
    ----------
    n : int
        Positive dimension.
    a : float
        Exponent, > -1.

    Returns
    -------
    float
        Logarithm of the integral.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not a > -1.0:
        raise DomainError(f"exponent must exceed -1, got {a}")
    return math.lgamma(n + 1.0) + sum(math.lgamma(j) + math.lgamma(a + j) for j in range(1, n + 1))


def log_selberg_norm(n: int, s: float) -> float:
    """log of the Hua-Pickrell normalizer; see :func:`selberg_norm`."""
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    value = n * math.log(math.pi) - n * (n + 2.0 * s - 1.0) * math.log(2.0)
    for j in range(n):
        value += math.lgamma(j + 1.0) + math.lgamma(2.0 * s + n - j) - 2.0 * math.lgamma(s + n - j)
    return value


def selberg_norm(n: int, s: float) -> float:
    """
    Normalizer of the Hua-Pickrell eigenvalue law on unordered points.

    pi^N 2^{-N(N+2s-1)} prod_{j=0}^{N-1} j! Gamma(2s+N-j) / Gamma(s+N-j)^2.
    The integral of Delta(x)^2 prod (1+x_j^2)^{-s-N} over R^N is N! times
    this value.

    Parameters
    ----------
    n : int
        Matrix size N.
    s : float
        Parameter, > -1/2.

    Returns
    -------
    float
        The normalizer.

    Examples
    --------
    >>> round(selberg_norm(1, 1.0) / math.pi, 12)
    0.5
    """
    return math.exp(log_selberg_norm(n, s))


def selberg_by_quadrature(n: int, s: float, cfg: QuadConfig = _DEFAULT_QUAD) -> float:
    """
    Brute-force Hua-Pickrell normalizer for N <= 2.

    With x = tan(theta) the integrand becomes
    Delta(tan theta)^2 prod cos(theta_j)^{2s+2N-2} on (-pi/2, pi/2)^N, which
    for N = 2 simplifies to sin^2(theta_1 - theta_2) prod cos(theta_j)^{2s}.
    """
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    half_pi = 0.5 * math.pi
    if n == 1:
        return adaptive_quad(lambda th: math.cos(th) ** (2.0 * s), -half_pi, half_pi, cfg).value
    if n == 2:
        value, _ = integrate.dblquad(
            lambda th2, th1: math.sin(th1 - th2) ** 2
            * (math.cos(th1) * math.cos(th2)) ** (2.0 * s),
            -half_pi,
            half_pi,
            -half_pi,
            half_pi,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
        )
        return float(value) / 2.0
    raise RangeError(f"brute-force quadrature supports N <= {MAX_BRUTE_FORCE_N}, got {n}")


def aomoto(n: int, k: int, alpha: float) -> float:
    """
    Aomoto's integral a_{N,k}^(alpha).

    int_{(0,inf)^N} prod_{j<=k} y_j prod y_j^{alpha-1} e^{-y_j} Delta(y)^2 dy
    = C_N^((alpha-1)/2) prod_{j=1}^k (alpha + N - j), evaluated in log space.

    Parameters
    ----------
    n : int
        Dimension N.
    k : int
        Number of linear factors, 0 <= k <= N.
    alpha : float
        Positive exponent.

    Returns
    -------
    float
        The integral.

    Examples
    --------
    >>> aomoto(1, 1, 1.0)
    1.0
    """
    if not 0 <= k <= n:
        raise DomainError(f"k must lie in [0, N={n}], got {k}")
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    log_value = laguerre_selberg_log(n, alpha - 1.0)
    log_value += sum(math.log(alpha + n - j) for j in range(1, k + 1))
    return math.exp(log_value)


def aomoto_by_quadrature(n: int, k: int, alpha: float, cfg: QuadConfig = _DEFAULT_QUAD) -> float:
    """Brute-force Aomoto integral for N <= 2."""
    if not 0 <= k <= n:
        raise DomainError(f"k must lie in [0, N={n}], got {k}")
    if n == 1:
        return adaptive_quad(
            lambda y: y**k * y ** (alpha - 1.0) * math.exp(-y), 0.0, np.inf, cfg
        ).value
    if n == 2:

        def integrand(y2: float, y1: float) -> float:
            linear = (y1 if k >= 1 else 1.0) * (y2 if k >= 2 else 1.0)
            return linear * (y1 * y2) ** (alpha - 1.0) * math.exp(-y1 - y2) * (y1 - y2) ** 2

        value, _ = integrate.dblquad(
            integrand, 0.0, np.inf, 0.0, np.inf, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol
        )
        return float(value)
    raise RangeError(f"brute-force quadrature supports N <= {MAX_BRUTE_FORCE_N}, got {n}")


def winn_identity_check_N1(s: float, t: float, cfg: QuadConfig = _DEFAULT_QUAD) -> WinnCheck:
    """
    Both sides of the one-dimensional Fourier identity.

    lhs = int e^{itx} (1+x^2)^{-s-1} dx, evaluated as
    2 int_0^inf cos(tx) (1+x^2)^{-s-1} dx by QUADPACK's Fourier rule;
    rhs = pi 2^{-2s} / Gamma(s+1)^2 * e^{-t} int_0^inf (y+2t)^s y^s e^{-y} dy.

    Parameters
    ----------
    s : float
        Parameter, > -1/2.
    t : float
        Positive frequency.
    cfg : QuadConfig
        Tolerance policy.

    Returns
    -------
    WinnCheck
        ``(lhs, rhs, rel_gap)``.

    Raises
    ------
    DomainError
        If ``s <= -1/2`` or ``t <= 0``.
    """
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")

    fourier = adaptive_quad(
        lambda x: (1.0 + x * x) ** (-s - 1.0), 0.0, np.inf, cfg, weight="cos", wvar=t
    )
    lhs = complex(2.0 * fourier.value, 0.0)

    log_const = math.log(math.pi) - 2.0 * s * math.log(2.0) - 2.0 * math.lgamma(s + 1.0)
    rhs = math.exp(log_const - t) * hankel_moment(0, 0, 2.0 * t, s, s, cfg)

    rel_gap = abs(lhs - rhs) / abs(rhs)
    logger.debug("Winn N=1 check s=%s t=%s: rel_gap=%.3e", s, t, rel_gap)
    return WinnCheck(lhs=lhs, rhs=rhs, rel_gap=rel_gap)
