"""
Arithmetic factor a(s) and the conjectured leading coefficient of joint moments.

    a(s) = prod_p (1 - 1/p)^{s^2} sum_{k>=0} ((s)_k / k!)^2 p^{-k}.

The logarithm of each local factor is -s^2 (s-1)^2 / (4 p^2) + O(p^{-3}),
so the primes beyond the cutoff P contribute about
-s^2 (s-1)^2 / 4 * E_1(log P), the prime-number-theorem estimate of
sum_{p > P} p^{-2}.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray
from scipy import special

from rmtsums.distribution.moments import moment_R
from rmtsums.errors import AccuracyError, DomainError, RangeError
from rmtsums.specfun.config import EvalResult, SeriesConfig

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

MAX_PRIME_CUTOFF = 50_000_000


def primes_up_to(cutoff: int) -> NDArray[np.int64]:
    """
    Primes p <= cutoff by the sieve of Eratosthenes.

    Examples
    --------
    >>> primes_up_to(20).tolist()
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if cutoff < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(cutoff + 1, dtype=bool)
    sieve[:2] = False
    for n in range(2, math.isqrt(cutoff) + 1):
        if sieve[n]:
            sieve[n * n :: n] = False
    return np.flatnonzero(sieve).astype(np.int64)


def _log_local_factor(s: int, p: int, cfg: SeriesConfig) -> float:
    """log[(1 - 1/p)^{s^2} sum_k ((s)_k/k!)^2 p^{-k}]."""
    x = 1.0 / p
    term = 1.0
    excess = 0.0
    for k in range(cfg.k_max):
        term *= ((s + k) / (k + 1)) ** 2 * x
        excess += term
        if term < cfg.eps_rel * excess:
            return s * s * math.log1p(-x) + math.log1p(excess)
    raise AccuracyError(f"local factor at p={p} did not converge", best_estimate=excess)


def arithmetic_factor(
    s: int,
    prime_cutoff: int,
    cfg: SeriesConfig = _DEFAULT_SERIES,
    tail_correction: bool = True,
) -> EvalResult:
    """
    Truncated Euler product for a(s).

    Parameters
    ----------
    s : int
        Nonnegative integer; a(0) = a(1) = 1 exactly.
    prime_cutoff : int
        Largest prime considered, at least 2.
    cfg : SeriesConfig
        Truncation policy for the local series.
    tail_correction : bool, default True
        Add the leading-order estimate of the primes beyond the cutoff.

    Returns
    -------
    EvalResult
        ``terms_used`` is the number of primes; ``err_est`` scales the last
        prime's increment by the sqrt(P) fluctuation of the prime count when
        corrected, and adds the omitted tail estimate otherwise.

    Raises
    ------
    DomainError
        If ``s`` is negative or ``prime_cutoff < 2``.
    RangeError
        If the cutoff exceeds the sieve limit.

    Examples
    --------
    >>> arithmetic_factor(1, 1000).value
    1.0
    """
    if s < 0 or int(s) != s:
        raise DomainError(f"s must be a nonnegative integer, got {s}")
    if prime_cutoff < 2:
        raise DomainError(f"prime_cutoff must be at least 2, got {prime_cutoff}")
    if prime_cutoff > MAX_PRIME_CUTOFF:
        raise RangeError(f"prime_cutoff must not exceed {MAX_PRIME_CUTOFF}, got {prime_cutoff}")
    s = int(s)
    primes = primes_up_to(prime_cutoff)
    if s <= 1:
        # Every local factor is identically 1
        return EvalResult(value=1.0, err_est=0.0, terms_used=len(primes))

    log_value = 0.0
    last = 0.0
    for p in primes.tolist():
        last = _log_local_factor(s, p, cfg)
        log_value += last

    coefficient = s * s * (s - 1) ** 2 / 4.0
    tail = -coefficient * float(special.exp1(math.log(prime_cutoff)))
    flags: tuple[str, ...] = ()
    if tail_correction:
        log_value += tail
        rel_err = abs(last) * math.sqrt(prime_cutoff)
        flags = ("tail_corrected",)
    else:
        rel_err = abs(last) + 2.0 * abs(tail)
    value = math.exp(log_value)
    logger.debug(
        "arithmetic_factor s=%d over %d primes: %.15g (tail %.3e)", s, len(primes), value, tail
    )
    return EvalResult(value=value, err_est=value * rel_err, terms_used=len(primes), flags=flags)


def conjecture_rhs(
    s: int,
    h: float,
    x: float,
    prime_cutoff: int = 100_000,
    cfg: SeriesConfig = _DEFAULT_SERIES,
) -> float:
    """
    Conjectured leading term a(s) R(s, h) (log x)^{s^2 + 2h}.

    Parameters
    ----------
    s : int
        Nonnegative integer.
    h : float
        Real exponent in [0, s + 1/2).
    x : float
        Height, > e.
    prime_cutoff : int
        Euler-product cutoff for a(s).
    cfg : SeriesConfig
        Truncation policy.

    Returns
    -------
    float
        The right-hand side.

    Examples
    --------
    >>> round(conjecture_rhs(1, 1.0, math.e**2), 12)
    0.666666666667
    """
    if not 0.0 <= h < s + 0.5:
        raise DomainError(f"h must lie in [0, {s + 0.5}), got {h}")
    if not x > math.e:
        raise DomainError(f"x must exceed e, got {x}")
    a = arithmetic_factor(s, prime_cutoff, cfg).value
    r = moment_R(s, h, cfg).value
    return float(a) * float(r) * math.log(x) ** (s * s + 2.0 * h)
