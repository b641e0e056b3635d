"""
Moments of deformed Laguerre weights and their Hankel determinants.

The weight family is w(y) = f(y) y^alpha e^{-y} on (0, inf), where the
deformation f is (y + t)^lambda for the Hankel sigma-form and
(y + t/N)^s for the finite-N characteristic function.

Hankel determinants det[int y^{j+k} w dy] are badly conditioned in the
monomial basis. :func:`gram_logdet` evaluates them as the Gram determinant
of the orthonormal Laguerre basis of y^alpha e^{-y} times the known product
of leading coefficients, which keeps N = 24 well within double precision.
"""

import logging
import math
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from rmtsums.errors import ConsistencyError, DomainError
from rmtsums.oracles.config import QuadConfig
from rmtsums.oracles.quadrature import adaptive_quad, adaptive_quad_vec
from rmtsums.specfun.linalg import det_logspace
from rmtsums.specfun.orthopoly import gauss_laguerre_rule, orthonormal_laguerre_table

logger = logging.getLogger(__name__)

_DEFAULT_QUAD = QuadConfig()

WeightFactor = Callable[[NDArray[np.float64]], NDArray[np.float64]]


def hankel_moment(
    j: int,
    k: int,
    t: float,
    alpha: float,
    lam: float,
    cfg: QuadConfig = _DEFAULT_QUAD,
) -> float:
    """
    Moment int_0^inf y^{j+k} (y+t)^lambda y^alpha e^{-y} dy.

    The integral is split at y = 1. On [0, 1] a negative alpha is removed
    exactly by the substitution y = u^{1/(1+alpha)}; on [1, inf) the
    integral is truncated where e^{-y} y^p drops below ``cfg.abs_tol``.

    Parameters
    ----------
    j, k : int
        Nonnegative matrix indices.
    t : float
        Nonnegative shift.
    alpha : float
        Exponent at the origin, > -1.
    lam : float
        Exponent of the shifted factor.
    cfg : QuadConfig
        Tolerance policy.

    Returns
    -------
    float
        The moment. At t = 0 the closed form Gamma(j+k+alpha+lambda+1).

    Raises
    ------
    DomainError
        If ``alpha <= -1``, ``t < 0`` or the moment diverges at t = 0.

    Examples
    --------
    >>> round(hankel_moment(0, 0, 1.0, 0.0, 1.0), 10)
    2.0
    """
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    power = j + k
    if t == 0.0:
        exponent = power + alpha + lam + 1.0
        if not exponent > 0.0:
            raise DomainError(f"moment diverges at t=0 for exponent {exponent}")
        return math.exp(math.lgamma(exponent))

    def body(y: float) -> float:
        return y**power * (y + t) ** lam * math.exp(-y)

    if alpha < 0.0:
        inv = 1.0 / (1.0 + alpha)
        head = adaptive_quad(lambda u: body(u**inv), 0.0, 1.0, cfg).value * inv
    else:
        head = adaptive_quad(lambda y: y**alpha * body(y), 0.0, 1.0, cfg).value

    cutoff = cfg.cutoff_for_power(power + alpha + max(lam, 0.0))
    tail = adaptive_quad(lambda y: y**alpha * body(y), 1.0, cutoff, cfg).value
    return head + tail


def hankel_matrix(
    n: int, t: float, alpha: float, lam: float, cfg: QuadConfig = _DEFAULT_QUAD
) -> NDArray[np.float64]:
    """Moment matrix [hankel_moment(j, k, t, alpha, lam)], one quadrature per anti-diagonal."""
    diagonals = [hankel_moment(d, 0, t, alpha, lam, cfg) for d in range(2 * n - 1)]
    return np.array([[diagonals[j + k] for k in range(n)] for j in range(n)])


def gram_matrix(
    n: int,
    alpha: float,
    factor: WeightFactor,
    cfg: QuadConfig = _DEFAULT_QUAD,
    polynomial_degree: int | None = None,
    max_power: float = 0.0,
) -> NDArray[np.float64]:
    """
    Gram matrix int Lhat_j Lhat_k factor(y) y^alpha e^{-y} dy, j, k < n.

    Parameters
    ----------
    n : int
        Matrix size.
    alpha : float
        Laguerre parameter, > -1.
    factor : callable
        Vectorized deformation f(y).
    cfg : QuadConfig
        Tolerance policy for the non-polynomial route.
    polynomial_degree : int, optional
        If f is a polynomial of this degree, Gauss-Laguerre quadrature with
        enough nodes evaluates the matrix exactly.
    max_power : float, default 0
        Growth exponent of f at infinity, used for the truncation point.

    Returns
    -------
    ndarray
        Symmetric (n, n) matrix.
    """
    if polynomial_degree is not None:
        nodes_needed = n + (polynomial_degree + 1) // 2 + 1
        y, w = gauss_laguerre_rule(nodes_needed, alpha)
        basis = orthonormal_laguerre_table(n, alpha, y)
        weighted = basis * (w * factor(y))[None, :]
        gram = weighted @ basis.T
        return 0.5 * (gram + gram.T)

    iu = np.triu_indices(n)
    m = max(1, math.ceil(3.0 / (alpha + 1.0)))

    def head(u: float) -> NDArray[np.float64]:
        # y = u^m, dy = m u^{m-1} du, so y^alpha dy = m u^{m(alpha+1)-1} du
        y = u**m
        basis = orthonormal_laguerre_table(n, alpha, np.array([y]))[:, 0]
        outer = np.outer(basis, basis)[iu]
        jacobian = m * u ** (m * (alpha + 1.0) - 1.0)
        return outer * float(factor(np.array([y]))[0]) * math.exp(-y) * jacobian

    def tail(y: float) -> NDArray[np.float64]:
        basis = orthonormal_laguerre_table(n, alpha, np.array([y]))[:, 0]
        outer = np.outer(basis, basis)[iu]
        return outer * float(factor(np.array([y]))[0]) * y**alpha * math.exp(-y)

    cutoff = cfg.cutoff_for_power(2 * n - 2 + alpha + max_power)
    upper_head, _ = adaptive_quad_vec(head, 0.0, 1.0, cfg)
    upper_tail, _ = adaptive_quad_vec(tail, 1.0, cutoff, cfg)
    gram = np.zeros((n, n))
    gram[iu] = upper_head + upper_tail
    return gram + np.triu(gram, 1).T


def gram_logdet(
    n: int,
    alpha: float,
    factor: WeightFactor,
    cfg: QuadConfig = _DEFAULT_QUAD,
    polynomial_degree: int | None = None,
    max_power: float = 0.0,
) -> float:
    """
    log det of the monomial Hankel matrix of factor(y) y^alpha e^{-y}.

    log det H = log det G + sum_{j<n} [log j! + log Gamma(j + alpha + 1)],
    where G is the orthonormal-basis Gram matrix of :func:`gram_matrix`.

    Raises
    ------
    ConsistencyError
        If the Gram determinant is not positive (the weight is positive, so
        the matrix must be positive definite).
    """
    gram = gram_matrix(n, alpha, factor, cfg, polynomial_degree, max_power)
    sign, log_abs = det_logspace(gram)
    if sign <= 0:
        raise ConsistencyError(
            f"Gram determinant of a positive weight has sign {sign} (n={n}, alpha={alpha})"
        )
    shift = sum(math.lgamma(j + 1.0) + math.lgamma(j + alpha + 1.0) for j in range(n))
    return log_abs + shift


def hankel_logdet(
    n: int, t: float, alpha: float, lam: float, cfg: QuadConfig = _DEFAULT_QUAD
) -> float:
    """
    log F_n(t) for the weight (y + t)^lambda y^alpha e^{-y}.

    Integer lambda >= 0 is evaluated exactly by Gauss-Laguerre quadrature.
    """
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")

    def factor(y: NDArray[np.float64]) -> NDArray[np.float64]:
        return (y + t) ** lam

    degree = int(lam) if float(lam).is_integer() and lam >= 0 else None
    return gram_logdet(n, alpha, factor, cfg, polynomial_degree=degree, max_power=max(lam, 0.0))
