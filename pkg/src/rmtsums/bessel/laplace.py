"""
Laplace transform psi_N^(nu)(t) = E exp(-t sum_j 1/(N x_j)) under the LUE.

By the Andreief identity psi_N is a ratio of Hankel determinants,

    psi_N^(nu)(t) = det[int x^{j+k+nu} e^{-x - t/(N x)} dx] / det[Gamma(j+k+nu+1)],

which equals the determinant of the Gram matrix of the orthonormal Laguerre
functions of x^nu e^{-x} under the factor e^{-t/(N x)}. The Gram integrals
are taken in u = log x, where the integrand decays doubly exponentially at
both ends.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray
from scipy import special

from rmtsums.bessel.config import MAX_QUADRATURE_N, BesselParams, LaplaceValue
from rmtsums.errors import AccuracyError, ConsistencyError, DomainError, RangeError
from rmtsums.oracles.config import QuadConfig, gram_config
from rmtsums.oracles.quadrature import adaptive_quad_vec
from rmtsums.specfun.linalg import det_logspace
from rmtsums.specfun.orthopoly import orthonormal_laguerre_table

logger = logging.getLogger(__name__)


def lue_log_norm(nu: float, n: int) -> float:
    """
    log C~_N^(nu) = sum_{j=1}^N [log Gamma(j) + log Gamma(nu + j)].

    The LUE eigenvalue integral of Delta(x)^2 prod x_j^nu e^{-x_j} over the
    Weyl chamber, equal to det[Gamma(j+k+nu+1)]_{j,k<N}.

    Examples
    --------
    >>> round(math.exp(lue_log_norm(0.0, 2)), 12)
    1.0
    """
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    return sum(math.lgamma(j) + math.lgamma(nu + j) for j in range(1, n + 1))


def inverse_laguerre_log_norm(nu: float, n: int) -> float:
    """
    log of the chamber integral of Delta(y)^2 prod y_j^{-nu-2N} e^{-2/y_j}.

    The substitution y = 2/x turns it into 2^{-N(N+nu)} C~_N^(nu).
    """
    return lue_log_norm(nu, n) - n * (n + nu) * math.log(2.0)


def _lower_log_cutoff(nu: float, n: int, t: float, tol: float) -> float:
    # Below x_lo the factor x^{nu+1} e^{-t/(N x)} is under tol
    by_power = tol ** (1.0 / (nu + 1.0))
    by_factor = t / (n * math.log(1.0 / tol)) if t > 0.0 else 0.0
    return math.log(max(by_power, by_factor))


def laplace_gram(p: BesselParams, cfg: QuadConfig | None = None) -> NDArray[np.float64]:
    """
    Gram matrix int Lhat_j Lhat_k x^nu e^{-x} e^{-t/(N x)} dx, j, k < N.

    Parameters
    ----------
    p : BesselParams
        Evaluation point.
    cfg : QuadConfig, optional
        Quadrature policy; defaults to the tight Gram policy.

    Returns
    -------
    ndarray
        Symmetric (N, N) matrix; the identity at t = 0.
    """
    quad = gram_config() if cfg is None else cfg
    n, nu, t = p.n, p.nu, p.t
    iu = np.triu_indices(n)
    u_lo = _lower_log_cutoff(nu, n, t, quad.abs_tol)
    u_hi = math.log(quad.cutoff_for_power(2 * n - 2 + nu + 1.0))
    shift = t / n

    def integrand(u: float) -> NDArray[np.float64]:
        x = math.exp(u)
        basis = orthonormal_laguerre_table(n, nu, np.array([x]))[:, 0]
        # dx = x du
        weight = math.exp((nu + 1.0) * u - x - shift / x)
        return np.outer(basis, basis)[iu] * weight

    upper, err = adaptive_quad_vec(integrand, u_lo, u_hi, quad)
    logger.debug(
        "Laplace Gram nu=%s N=%d t=%.6g on u in [%.2f, %.2f], err=%.2e", nu, n, t, u_lo, u_hi, err
    )
    gram = np.zeros((n, n))
    gram[iu] = upper
    return gram + np.triu(gram, 1).T


def _unit_bounded(value: float, err: float, p: BesselParams) -> float:
    # psi_N <= 1; only an overshoot inside the error estimate is rounded down
    if value > 1.0 + err:
        raise AccuracyError(
            f"psi_N = {value!r} exceeds 1 by more than its error estimate {err:.3e} "
            f"(nu={p.nu}, N={p.n}, t={p.t})"
        )
    return min(value, 1.0)


def psi_N(p: BesselParams, cfg: QuadConfig | None = None) -> LaplaceValue:
    """
    psi_N^(nu)(t) by the Hankel-determinant route.

    Parameters
    ----------
    p : BesselParams
        (nu, N, t) with N <= 16.
    cfg : QuadConfig, optional
        Quadrature policy; defaults to the tight Gram policy.

    Returns
    -------
    LaplaceValue
        Method ``"hankel_quadrature"``; exactly 1 at t = 0.

    Raises
    ------
    RangeError
        If ``N > 16``.
    ConsistencyError
        If the Gram determinant is not positive.
    AccuracyError
        If the determinant exceeds 1 by more than its error estimate.

    Examples
    --------
    >>> psi_N(BesselParams(nu=1.0, n=3, t=0.0)).value
    1.0
    """
    if p.n > MAX_QUADRATURE_N:
        raise RangeError(f"quadrature route supports N <= {MAX_QUADRATURE_N}, got {p.n}")
    if p.t == 0.0:
        return LaplaceValue(t=0.0, value=1.0, err_est=0.0, method="hankel_quadrature")

    quad = gram_config() if cfg is None else cfg
    gram = laplace_gram(p, quad)
    sign, log_abs = det_logspace(gram)
    if sign <= 0:
        raise ConsistencyError(
            f"Laplace Gram determinant has sign {sign} (nu={p.nu}, N={p.n}, t={p.t})"
        )
    value = math.exp(log_abs)
    err = value * p.n * quad.rel_tol + p.n * quad.abs_tol
    return LaplaceValue(
        t=p.t, value=_unit_bounded(value, err, p), err_est=err, method="hankel_quadrature"
    )


def psi_N1_closed(nu: float, t: float) -> LaplaceValue:
    """
    psi_1^(nu)(t) = 2 t^{(nu+1)/2} K_{nu+1}(2 sqrt(t)) / Gamma(nu+1).

    Examples
    --------
    >>> round(psi_N1_closed(0.0, 1.0).value, 12)
    0.279731763633
    """
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return LaplaceValue(t=0.0, value=1.0, err_est=0.0, method="closed_form_n1")
    z = 2.0 * math.sqrt(t)
    log_value = (
        math.log(2.0)
        + 0.5 * (nu + 1.0) * math.log(t)
        + math.log(float(special.kve(nu + 1.0, z)))
        - z
        - math.lgamma(nu + 1.0)
    )
    value = math.exp(log_value)
    err = value * 1e-14
    return LaplaceValue(
        t=t,
        value=_unit_bounded(value, err, BesselParams(nu=nu, n=1, t=t)),
        err_est=err,
        method="closed_form_n1",
    )
