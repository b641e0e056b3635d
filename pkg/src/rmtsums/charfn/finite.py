"""
Finite-N characteristic functions of the scaled Hua-Pickrell trace.

phi_N^(s)(t) = E exp(it Tr(H)/(2N)) is reduced by Winn's identity and the
Andreief identity to

    phi_N^(s)(t) = (N! / C_N^(s)) e^{-|t|/2} det[int y^{j+k} (y + |t|/N)^s y^s e^{-y} dy],

with C_N^(s) = N! prod_{j=1}^N Gamma(j) Gamma(2s + j). Three routes are
provided: the Hankel determinant (any s > -1/2), the s x s Laguerre
determinant (integer s) and the elementary power series (s = 1).
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from rmtsums.charfn.config import CharFnValue
from rmtsums.errors import ConsistencyError, DomainError, RangeError
from rmtsums.oracles.config import QuadConfig, gram_config
from rmtsums.oracles.identities import laguerre_selberg_log
from rmtsums.oracles.moments import gram_logdet
from rmtsums.specfun.linalg import det_logspace
from rmtsums.specfun.orthopoly import laguerre

logger = logging.getLogger(__name__)

MAX_HANKEL_N = 24

_EPS = 2.220446049250313e-16


def c_n_constant(n: int, s: float) -> float:
    """
    log C_N^(s) = log N! + sum_{j=1}^N [log Gamma(j) + log Gamma(2s + j)].

    Parameters
    ----------
    n : int
        Positive matrix size.
    s : float
        Parameter, > -1/2.

    Returns
    -------
    float
        The logarithm of the constant.

    Examples
    --------
    >>> round(math.exp(c_n_constant(2, 0.0)), 12)
    2.0
    """
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    return laguerre_selberg_log(n, 2.0 * s)


def phi_finite_N(s: float, n: int, t: float, cfg: QuadConfig | None = None) -> CharFnValue:
    """
    phi_N^(s)(t) by the Hankel-determinant route.

    The determinant is evaluated in the orthonormal Laguerre basis of
    y^s e^{-y}; for integer s the deformation (y + |t|/N)^s is a polynomial
    and Gauss-Laguerre quadrature is exact, otherwise adaptive quadrature
    with the tolerances of ``cfg`` is used.

    Parameters
    ----------
    s : float
        Parameter, > -1/2.
    n : int
        Matrix size N, 1..24.
    t : float
        Argument; phi_N is even in t.
    cfg : QuadConfig, optional
        Quadrature policy for non-integer s. Defaults to the tight Gram policy.

    Returns
    -------
    CharFnValue
        Method ``"hankel_det"``.

    Raises
    ------
    DomainError
        If ``s <= -1/2`` or ``n < 1``.
    RangeError
        If ``n > 24``.
    ConsistencyError
        If the determinant is not positive.
    """
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    if n > MAX_HANKEL_N:
        raise RangeError(f"Hankel route supports N <= {MAX_HANKEL_N}, got {n}")
    a = abs(t)
    if a == 0.0:
        return CharFnValue(t=t, value=1.0, method="hankel_det", err_est=0.0)

    quad = gram_config() if cfg is None else cfg
    shift = a / n

    def factor(y: NDArray[np.float64]) -> NDArray[np.float64]:
        return (y + shift) ** s

    degree = int(s) if float(s).is_integer() else None
    log_det = gram_logdet(n, s, factor, quad, polynomial_degree=degree, max_power=max(s, 0.0))
    log_value = math.lgamma(n + 1.0) - c_n_constant(n, s) - 0.5 * a + log_det
    value = math.exp(log_value)
    err = value * (n * n * 16.0 * _EPS if degree is not None else n * quad.rel_tol)
    return CharFnValue(t=t, value=value, method="hankel_det", err_est=err)


def phi_finite_N_laguerre(s: int, n: int, t: float) -> CharFnValue:
    """
    phi_N^(s)(t) for integer s as an s x s Laguerre determinant.

    (-1)^{s(s-1)/2} prod_{j<N} Gamma(s+N-j)^2 / (j! Gamma(2s+N-j))
    * e^{-|t|/2} det[L^{(2s-1)}_{N+s-1-i-j}(-|t|/N)]_{i,j<s}.

    Parameters
    ----------
    s : int
        Positive integer.
    n : int
        Matrix size N >= s.
    t : float
        Argument.

    Returns
    -------
    CharFnValue
        Method ``"laguerre_det"``.

    Raises
    ------
    DomainError
        If ``s`` is not a positive integer or ``n < s``.
    ConsistencyError
        If the signed determinant is not positive.
    """
    if s < 1 or int(s) != s:
        raise DomainError(f"Laguerre route requires a positive integer s, got {s}")
    s = int(s)
    if n < s:
        raise DomainError(f"Laguerre route requires N >= s, got N={n}, s={s}")
    a = abs(t)
    x = -a / n
    matrix = np.array(
        [[laguerre(n + s - 1 - i - j, 2.0 * s - 1.0, x) for j in range(s)] for i in range(s)]
    )
    sign, log_abs = det_logspace(matrix)
    sign *= -1 if (s * (s - 1) // 2) % 2 else 1
    if sign <= 0:
        raise ConsistencyError(f"Laguerre determinant has wrong sign for s={s}, N={n}, t={t}")

    log_pref = sum(
        2.0 * math.lgamma(s + n - j) - math.lgamma(j + 1.0) - math.lgamma(2.0 * s + n - j)
        for j in range(n)
    )
    value = math.exp(log_pref - 0.5 * a + log_abs)
    cond = float(np.linalg.cond(matrix))
    return CharFnValue(t=t, value=value, method="laguerre_det", err_est=value * cond * 8.0 * _EPS)


def phi_finite_N_elementary(n: int, t: float) -> CharFnValue:
    """
    phi_N^(1)(t) = e^{-|t|/2} sum_{r=0}^N (N-r+1)_r / N^r |t|^r / (r! (r+1)!).

    Examples
    --------
    >>> round(phi_finite_N_elementary(1, 1.0).value / math.exp(-0.5), 12)
    1.5
    """
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    a = abs(t)
    # term_r / term_{r-1} = (N - r + 1) a / (N r (r + 1))
    term = 1.0
    total = 1.0
    for r in range(1, n + 1):
        term *= (n - r + 1) * a / (n * r * (r + 1))
        if term == 0.0:
            break
        total += term
    value = math.exp(-0.5 * a) * total
    return CharFnValue(t=t, value=value, method="elementary", err_est=value * (n + 1) * _EPS)
