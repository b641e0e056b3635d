"""
Correlation kernel of the determinantal process C^(s) and the sine kernel.

    K^(s)(x, y) = c_s (T(x) R(y) - T(y) R(x)) / (x - y),
    c_s = Gamma(s+1)^2 / (2 pi Gamma(2s+1) Gamma(2s+2)),
    T(x) = 2^{2s-1/2} Gamma(s+1/2) |x|^{-1/2} J_{s-1/2}(1/|x|),
    R(x) = sgn(x) 2^{2s+1/2} Gamma(s+3/2) |x|^{-1/2} J_{s+1/2}(1/|x|).

T is even and R odd, so K^(s)(-x, -y) = K^(s)(x, y). For s = 0,
T = cos(1/x) and R = sin(1/x), and x -> 1/x maps C^(0) to the sine process.
"""

import math

from scipy import special

from rmtsums.errors import DomainError
from rmtsums.specfun.bessel import BESSEL_J_MAX_ARG, bessel_j

DIAGONAL_THRESHOLD = 1e-6

# Diagonal offsets relative to the local oscillation scale min(|x|, x^2)
_DIAGONAL_OFFSET = 1e-3


def _bessel_j(order: float, z: float) -> float:
    if z <= BESSEL_J_MAX_ARG:
        return bessel_j(order, z)
    return float(special.jv(order, z))


def kernel_t(s: float, x: float) -> float:
    """T^(s)(x), even in x."""
    ax = abs(x)
    return (
        2.0 ** (2.0 * s - 0.5)
        * math.gamma(s + 0.5)
        * _bessel_j(s - 0.5, 1.0 / ax)
        / math.sqrt(ax)
    )


def kernel_r(s: float, x: float) -> float:
    """R^(s)(x), odd in x."""
    ax = abs(x)
    value = (
        2.0 ** (2.0 * s + 0.5)
        * math.gamma(s + 1.5)
        * _bessel_j(s + 0.5, 1.0 / ax)
        / math.sqrt(ax)
    )
    return value if x > 0 else -value


def _kernel_constant(s: float) -> float:
    return math.exp(
        2.0 * math.lgamma(s + 1.0) - math.lgamma(2.0 * s + 1.0) - math.lgamma(2.0 * s + 2.0)
    ) / (2.0 * math.pi)


def _divided_difference(s: float, x: float, y: float) -> float:
    return (kernel_t(s, x) * kernel_r(s, y) - kernel_t(s, y) * kernel_r(s, x)) / (x - y)


def kernel_Cs(s: float, x: float, y: float) -> float:
    """
    Correlation kernel K^(s)(x, y) of C^(s).

    Off the diagonal the divided difference is evaluated directly. When
    |x - y| < 1e-6 it is replaced by symmetric divided differences about the
    midpoint at two offsets, combined by one Richardson step.

    Parameters
    ----------
    s : float
        Parameter, > -1/2.
    x, y : float
        Nonzero points.

    Returns
    -------
    float
        K^(s)(x, y); symmetric in (x, y).

    Raises
    ------
    DomainError
        If ``s <= -1/2`` or either point is zero.
    """
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")
    if x == 0.0 or y == 0.0:
        raise DomainError(f"kernel points must be nonzero, got x={x}, y={y}")
    const = _kernel_constant(s)
    if abs(x - y) >= DIAGONAL_THRESHOLD:
        return const * _divided_difference(s, x, y)

    mid = 0.5 * (x + y)
    delta = _DIAGONAL_OFFSET * min(abs(mid), mid * mid)
    coarse = _divided_difference(s, mid + delta, mid - delta)
    fine = _divided_difference(s, mid + 0.5 * delta, mid - 0.5 * delta)
    return const * (4.0 * fine - coarse) / 3.0


def kernel_sine(x: float, y: float) -> float:
    """
    sin(x - y) / (x - y), equal to 1 on the diagonal.

    Examples
    --------
    >>> kernel_sine(0.3, 0.3)
    1.0
    """
    d = x - y
    if d == 0.0:
        return 1.0
    return math.sin(d) / d


def sine_pushforward_gap(u: float, v: float) -> float:
    """
    |K^(0)(1/u, 1/v) / (u v) - kernel_sine(u, v) / (2 pi)|.

    Vanishes up to rounding because x -> 1/x carries C^(0) to the sine process.
    """
    if u == 0.0 or v == 0.0:
        raise DomainError(f"points must be nonzero, got u={u}, v={v}")
    return abs(kernel_Cs(0.0, 1.0 / u, 1.0 / v) / (u * v) - kernel_sine(u, v) / (2.0 * math.pi))
