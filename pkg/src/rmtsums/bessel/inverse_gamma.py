"""
Inverse-Gamma law 2^{nu+1}/Gamma(nu+1) x^{-nu-2} e^{-2/x} of the exchangeable
diagonal entries e_i of the infinite inverse-Laguerre matrix.

sum_j 2/x_j over the LUE has the law of e_1 + ... + e_N, so E[e_1/2] = 1/nu
and moments of the scaled sum are bounded uniformly in N by those of e_1/2.
"""

import math

from rmtsums.errors import DomainError


def _check_nu(nu: float) -> None:
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")


def inverse_gamma_pdf(nu: float, x: float) -> float:
    """
    Density of e_1 at x; zero for x <= 0.

    Examples
    --------
    >>> round(inverse_gamma_pdf(0.0, 2.0), 12)
    0.183939720586
    """
    _check_nu(nu)
    if x <= 0.0:
        return 0.0
    log_pdf = (
        (nu + 1.0) * math.log(2.0)
        - math.lgamma(nu + 1.0)
        - (nu + 2.0) * math.log(x)
        - 2.0 / x
    )
    return math.exp(log_pdf)


def inverse_gamma_moment(nu: float, k: int) -> float:
    """
    E[e_1^k] = 2^k Gamma(nu + 1 - k) / Gamma(nu + 1).

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    k : int
        Nonnegative order below nu + 1.

    Returns
    -------
    float
        The moment.

    Raises
    ------
    DomainError
        If ``k < 0`` or the moment diverges (``k >= nu + 1``).

    Examples
    --------
    >>> inverse_gamma_moment(2.0, 1)
    1.0
    """
    _check_nu(nu)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if k >= nu + 1.0:
        raise DomainError(f"moment of order {k} diverges: k must be below nu + 1 = {nu + 1.0}")
    if k == 0:
        return 1.0
    return math.exp(k * math.log(2.0) + math.lgamma(nu + 1.0 - k) - math.lgamma(nu + 1.0))


def uniform_moment_bound(nu: float, k: int) -> float:
    """
    sup_N E[(sum_j 1/(N x_j))^k] <= 2^{-k} E[e_1^k] = Gamma(nu + 1 - k) / Gamma(nu + 1).

    Examples
    --------
    >>> round(uniform_moment_bound(3.0, 2), 12)
    0.166666666667
    """
    return inverse_gamma_moment(nu, k) / 2.0**k
