"""
Generalized hypergeometric series pFq.

Non-terminating series follow the shared truncation policy; terminating
series (a numerator parameter that is a nonpositive integer) are summed term
by term to the end, in exact rational arithmetic when every input is real.
"""

import logging
from fractions import Fraction
from typing import Sequence

from rmtsums.errors import AccuracyError, DomainError, RangeError
from rmtsums.specfun.config import EvalResult, SeriesConfig, SeriesStopper

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

Number = float | complex | int | Fraction


def _nonpositive_integer(value: Number) -> int | None:
    """Return -value when value is a nonpositive integer, else None."""
    if isinstance(value, complex):
        if value.imag != 0.0:
            return None
        value = value.real
    if float(value) <= 0.0 and float(value).is_integer():
        return int(-float(value))
    return None


def hyp_pfq(
    a: Sequence[Number],
    b: Sequence[Number],
    z: Number,
    cfg: SeriesConfig = _DEFAULT_SERIES,
) -> EvalResult:
    """
    Evaluate pFq(a; b; z) = sum_k prod (a_i)_k / prod (b_j)_k * z^k / k!.

    Parameters
    ----------
    a : sequence of float or complex
        Numerator parameters.
    b : sequence of float or complex
        Denominator parameters.
    z : float or complex
        Argument.
    cfg : SeriesConfig
        Truncation policy for non-terminating series.

    Returns
    -------
    EvalResult
        Sum, tail estimate and number of terms. Terminating series report
        ``err_est = 0``.

    Raises
    ------
    DomainError
        If a denominator parameter (b_j)_k vanishes before the series ends.
    AccuracyError
        If a non-terminating series does not settle within ``cfg.k_max`` terms.

    Examples
    --------
    >>> hyp_pfq([-2.0], [2.0], 2.0).value
    -0.3333333333333333
    """
    stops = [n for n in (_nonpositive_integer(ai) for ai in a) if n is not None]
    last_term = min(stops) if stops else None

    for bj in b:
        n_b = _nonpositive_integer(bj)
        if n_b is not None and (last_term is None or n_b < last_term):
            raise DomainError(
                f"denominator parameter {bj} reaches zero before the series terminates"
            )

    if last_term is not None:
        if last_term + 1 > cfg.k_max:
            raise RangeError(
                f"terminating series of {last_term + 1} terms exceeds k_max={cfg.k_max}"
            )
        value = _terminating_sum(a, b, z, last_term)
        logger.debug("hyp_pfq terminating sum with %d terms", last_term + 1)
        return EvalResult(value=value, err_est=0.0, terms_used=last_term + 1)

    is_complex = isinstance(z, complex) or any(isinstance(p, complex) for p in (*a, *b))
    term: float | complex = complex(1.0) if is_complex else 1.0
    total: float | complex = term
    prev_abs = 1.0
    stopper = SeriesStopper(cfg)
    for k in range(cfg.k_max - 1):
        num = 1.0 + 0j if is_complex else 1.0
        for ai in a:
            num *= ai + k
        den = 1.0 + 0j if is_complex else 1.0
        for bj in b:
            den *= bj + k
        prev_abs = abs(term)
        term = term * num / den * z / (k + 1)
        total += term
        if stopper.update(k + 1, term, total):
            ratio = abs(term) / prev_abs if prev_abs > 0 else 0.0
            tail = abs(term) * ratio / (1.0 - ratio) if ratio < 0.9 else 10.0 * abs(term)
            logger.debug("hyp_pfq converged after %d terms, tail=%.3e", k + 2, tail)
            return EvalResult(value=total, err_est=float(tail), terms_used=k + 2)

    raise AccuracyError(
        f"hyp_pfq({list(a)}; {list(b)}; {z}) did not converge in {cfg.k_max} terms",
        best_estimate=total,
        err_est=abs(term),
    )


def _terminating_sum(
    a: Sequence[Number], b: Sequence[Number], z: Number, last_term: int
) -> float | complex:
    exact = not any(isinstance(p, complex) for p in (*a, *b, z))
    if exact:
        fa = [Fraction(p) for p in a]
        fb = [Fraction(p) for p in b]
        fz = Fraction(z)
        term = Fraction(1)
        total = Fraction(1)
        for k in range(last_term):
            num = Fraction(1)
            for ai in fa:
                num *= ai + k
            den = Fraction(1)
            for bj in fb:
                den *= bj + k
            term = term * num / den * fz / (k + 1)
            total += term
        return float(total)

    cterm: complex = 1.0 + 0j
    ctotal: complex = cterm
    for k in range(last_term):
        num = 1.0 + 0j
        for ai in a:
            num *= complex(ai) + k
        den = 1.0 + 0j
        for bj in b:
            den *= complex(bj) + k
        cterm = cterm * num / den * complex(z) / (k + 1)
        ctotal += cterm
    return ctotal
