"""
Correlation kernel of the Bessel point process with parameter nu.

    K(x, y) = [sqrt(x) J_{nu+1}(sqrt x) J_nu(sqrt y)
               - sqrt(y) J_{nu+1}(sqrt y) J_nu(sqrt x)] / (2 (x - y)),
    K(x, x) = [J_nu(sqrt x)^2 - J_{nu+1}(sqrt x) J_{nu-1}(sqrt x)] / 4.
"""

import math

from scipy import special

from rmtsums.charfn.kernel import DIAGONAL_THRESHOLD
from rmtsums.errors import DomainError


def bessel_kernel_diagonal(nu: float, x: float) -> float:
    """
    One-point density K(x, x) of the Bessel process.

    Examples
    --------
    >>> round(bessel_kernel_diagonal(0.0, 1e-12), 12)
    0.25
    """
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x}")
    r = math.sqrt(x)
    jn = float(special.jv(nu, r))
    return 0.25 * (jn * jn - float(special.jv(nu + 1.0, r) * special.jv(nu - 1.0, r)))


def bessel_kernel(nu: float, x: float, y: float) -> float:
    """
    Bessel kernel K(x, y) at positive points.

    Within 1e-6 of the diagonal the kernel is replaced by its value at the
    midpoint of the diagonal; K(m + d, m - d) is even in d, so the error is
    O(d^2).

    Parameters
    ----------
    nu : float
        Parameter, > -1.
    x, y : float
        Positive points.

    Returns
    -------
    float
        K(x, y); symmetric in (x, y).
    """
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"kernel points must be positive, got x={x}, y={y}")
    if abs(x - y) < DIAGONAL_THRESHOLD:
        return bessel_kernel_diagonal(nu, 0.5 * (x + y))
    rx, ry = math.sqrt(x), math.sqrt(y)
    jx, jy = special.jv([nu, nu + 1.0], rx), special.jv([nu, nu + 1.0], ry)
    numerator = rx * jx[1] * jy[0] - ry * jy[1] * jx[0]
    return float(numerator / (2.0 * (x - y)))
