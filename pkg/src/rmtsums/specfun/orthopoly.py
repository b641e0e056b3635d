"""
Generalized Laguerre polynomials.

Scalar evaluation by the three-term recurrence in n, and a vectorized table
of orthonormal polynomials used to evaluate Hankel determinants in a
well-conditioned basis.
"""

import math

import numpy as np
from numpy.typing import NDArray
from scipy import special

from rmtsums.errors import DomainError


def laguerre(n: int, alpha: float, x: float) -> float:
    """
    Generalized Laguerre polynomial L_n^(alpha)(x).

    Parameters
    ----------
    n : int
        Nonnegative degree.
    alpha : float
        Parameter.
    x : float
        Evaluation point.

    Returns
    -------
    float
        L_n^(alpha)(x).

    Examples
    --------
    >>> laguerre(2, 1.0, 0.0)
    3.0
    """
    if n < 0:
        raise DomainError(f"laguerre degree must be nonnegative, got {n}")
    prev, cur = 1.0, 1.0 + alpha - x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def orthonormal_laguerre_table(
    n: int, alpha: float, y: NDArray[np.float64]
) -> NDArray[np.float64]:
    """
    Orthonormal Laguerre functions for the weight y^alpha e^{-y}.

    Row j holds L_j^(alpha)(y) / sqrt(Gamma(j+alpha+1)/j!), so that
    sum over rows of the Gram matrix under the weight is the identity.

    Parameters
    ----------
    n : int
        Number of polynomials (degrees 0..n-1).
    alpha : float
        Laguerre parameter, > -1.
    y : ndarray
        Evaluation points.

    Returns
    -------
    ndarray
        Array of shape (n, len(y)).
    """
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    y = np.asarray(y, dtype=float)
    table = np.empty((n, y.size))
    if n == 0:
        return table
    table[0] = 1.0
    if n > 1:
        table[1] = 1.0 + alpha - y
    for k in range(1, n - 1):
        table[k + 1] = ((2 * k + 1 + alpha - y) * table[k] - (k + alpha) * table[k - 1]) / (k + 1)
    scale = np.array(
        [math.exp(-0.5 * (math.lgamma(j + alpha + 1.0) - math.lgamma(j + 1.0))) for j in range(n)]
    )
    return table * scale[:, None]


def laguerre_log_norms(n: int, alpha: float) -> NDArray[np.float64]:
    """log of the squared norms Gamma(j+alpha+1)/j! of L_j^(alpha), j < n."""
    return np.array([math.lgamma(j + alpha + 1.0) - math.lgamma(j + 1.0) for j in range(n)])


def gauss_laguerre_rule(n: int, alpha: float) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Generalized Gauss-Laguerre nodes and weights for y^alpha e^{-y}.

    Exact for polynomial integrands of degree below 2n.
    """
    nodes, weights = special.roots_genlaguerre(n, alpha)
    return np.asarray(nodes, dtype=float), np.asarray(weights, dtype=float)
