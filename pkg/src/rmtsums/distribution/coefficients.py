"""
Rational coefficients a_k(s) of the expansion

    R(s, h) = G(s+1)^2/G(2s+1) * 2^{-2h}/cos(pi h) * sum_k a_k(s) (-2h)_k / k!.

a_k = k! 2^k c_k(s), with c_k the normalized composition coefficients.
"""

import math
from fractions import Fraction

from rmtsums.charfn.series import normalized_coefficient
from rmtsums.errors import DomainError
from rmtsums.specfun.combinatorics import composition_coefficient

MAX_CLOSED_ORDER = 4


def coeff_a(s: int, k: int) -> Fraction:
    """
    Closed rational form of a_k(s) for k = 0..4.

    Parameters
    ----------
    s : int
        Integer, at least 1 for k <= 2 and at least 2 for k in {3, 4}.
    k : int
        Order, 0..4.

    Returns
    -------
    Fraction
        a_k(s).

    Raises
    ------
    DomainError
        If ``k`` or ``s`` is out of range.

    Examples
    --------
    >>> coeff_a(2, 2)
    Fraction(14, 15)
    """
    if not 0 <= k <= MAX_CLOSED_ORDER:
        raise DomainError(f"k must lie in 0..{MAX_CLOSED_ORDER}, got {k}")
    min_s = 2 if k >= 3 else 1
    if s < min_s or int(s) != s:
        raise DomainError(f"a_{k} needs an integer s >= {min_s}, got {s}")
    q = 4 * int(s) ** 2
    if k <= 1:
        return Fraction(1)
    if k == 2:
        return Fraction(q - 2, q - 1)
    if k == 3:
        return Fraction(q - 4, q - 1)
    return Fraction((q - 8) ** 2 + 2, (q - 1) * (q - 9))


def coeff_a_from_series(s: int, k: int) -> Fraction:
    """a_k(s) = k! 2^k c_k(s) from the power-series determinant."""
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    return math.factorial(k) * 2**k * normalized_coefficient(s, k)


def coeff_a_brute_force(s: int, k: int) -> Fraction:
    """
    a_k(s) = k! 2^k b_k(s) / b_0(s) by enumerating compositions.

    Independent of :func:`coeff_a_from_series`; c_0 = 1 makes the two
    normalizations agree.
    """
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    return math.factorial(k) * 2**k * composition_coefficient(s, k) / composition_coefficient(s, 0)
