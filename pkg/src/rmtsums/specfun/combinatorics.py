"""
Compositions and the exact coefficient series of the explicit characteristic function.

For a positive integer s the function e^{|t|/2} phi^(s)(t) is an entire
power series V^(s) sum_k b_k(s) |t|^k with

    b_k(s) = sum_{k_1 + ... + k_s = k} det[1/(k_i + i + j - 1)!] prod_j 1/k_j!

(indices i, j = 1..s). The coefficients are rational; they are computed once
in exact arithmetic and cached.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from rmtsums.errors import DomainError


def compositions(k: int, s: int) -> Iterator[tuple[int, ...]]:
    """
    Weak compositions of k into s nonnegative parts, in lexicographic order.

    Parameters
    ----------
    k : int
        Nonnegative total.
    s : int
        Positive number of parts.

    Yields
    ------
    tuple of int
        ``(k_1, ..., k_s)`` with ``sum == k``; there are C(k+s-1, s-1) of them.

    Examples
    --------
    >>> list(compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    if s == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, s - 1):
            yield (first, *rest)


def _exact_det(matrix: list[list[Fraction]]) -> Fraction:
    """Fraction-valued determinant by Gaussian elimination."""
    n = len(matrix)
    a = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


@lru_cache(maxsize=None)
def factorial_reciprocal_det(parts: tuple[int, ...]) -> Fraction:
    """
    det[1/(k_i + i + j - 1)!]_{i,j=1..s} for a composition (k_1, ..., k_s).

    Examples
    --------
    >>> factorial_reciprocal_det((0, 0))
    Fraction(1, 12)
    """
    s = len(parts)
    matrix = [
        [Fraction(1, math.factorial(parts[i] + (i + 1) + (j + 1) - 1)) for j in range(s)]
        for i in range(s)
    ]
    return _exact_det(matrix)


@lru_cache(maxsize=None)
def composition_coefficient(s: int, k: int) -> Fraction:
    """
    Exact coefficient b_k(s) of the composition series.

    Parameters
    ----------
    s : int
        Positive integer.
    k : int
        Nonnegative power of |t|.

    Returns
    -------
    Fraction
        b_k(s). ``V^(s) * b_0(s) == 1``.
    """
    total = Fraction(0)
    for parts in compositions(k, s):
        weight = Fraction(1)
        for kj in parts:
            weight /= math.factorial(kj)
        total += factorial_reciprocal_det(parts) * weight
    return total


def composition_coefficients(s: int, k_max: int) -> list[Fraction]:
    """b_0(s), ..., b_{k_max - 1}(s)."""
    return [composition_coefficient(s, k) for k in range(k_max)]


def multinomial_count(k: int, s: int) -> int:
    """Number of weak compositions of k into s parts, C(k+s-1, s-1)."""
    return math.comb(k + s - 1, s - 1)


def _permutation_sign(perm: tuple[int, ...]) -> int:
    n = len(perm)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def determinant_series_coefficients(s: int, count: int) -> tuple[Fraction, ...]:
    """
    b_0(s), ..., b_{count-1}(s) from the power-series determinant.

    Row i of the composition sum collapses to the series
    f_n(t) = sum_m t^m / (m! (m+n)!) with n = i + j - 1, so b_k is the t^k
    coefficient of det[f_{i+j-1}(t)]. The determinant is expanded over
    permutations with truncated exact products, which is far cheaper than
    enumerating compositions once k exceeds a few dozen.

    Parameters
    ----------
    s : int
        Positive integer.
    count : int
        Number of coefficients.

    Returns
    -------
    tuple of Fraction
        Agrees term by term with :func:`composition_coefficient`.
    """
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    rows = {
        n: [Fraction(1, math.factorial(m) * math.factorial(m + n)) for m in range(count)]
        for n in range(1, 2 * s)
    }
    total = [Fraction(0)] * count
    for perm in itertools.permutations(range(s)):
        product = rows[perm[0] + 1]
        for i in range(1, s):
            factor = rows[i + perm[i] + 1]
            product = [
                sum((product[a] * factor[k - a] for a in range(k + 1)), Fraction(0))
                for k in range(count)
            ]
        sign = _permutation_sign(perm)
        total = [acc + sign * term for acc, term in zip(total, product)]
    return tuple(total)
