"""
Empirical estimators over sample batches.

All statistics are functions of the normalized trace S = sum_j v_j / N of a
row. For Hua-Pickrell rows S is trace/N and the characteristic function is
E cos(t S / 2); for inverse-Laguerre rows (v = y = 2/x) t S / 2 equals
t sum_j 1/(N x_j), so E exp(-t S / 2) is psi_N^(nu)(t).
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from rmtsums.ensembles.config import Estimate, SampleBatch
from rmtsums.ensembles.diagnostics import effective_sample_size, walker_series

logger = logging.getLogger(__name__)

# Fractional-moment estimators are trusted for 2h below s + this margin
ABS_MOMENT_MARGIN = 0.4


def trace_statistic(batch: SampleBatch) -> NDArray[np.float64]:
    """
    Normalized trace sum_j v_j / N of every row.

    Parameters
    ----------
    batch : SampleBatch
        Eigenvalue samples.

    Returns
    -------
    ndarray, shape (len(batch),)
        One value per row, in batch order.
    """
    return batch.eigenvalues.mean(axis=1)


def _standard_error(batch: SampleBatch, values: NDArray[np.float64]) -> float:
    n = values.size
    std = float(np.std(values, ddof=1)) if n > 1 else 0.0
    if std == 0.0:
        return 0.0
    if not batch.is_mcmc:
        return std / math.sqrt(n)
    ess = sum(effective_sample_size(series) for series in walker_series(batch, values))
    logger.debug("Effective sample size %.1f of %d MCMC rows", ess, n)
    return std / math.sqrt(min(max(ess, 1.0), n))


def mean_estimate(
    batch: SampleBatch, values: NDArray[np.float64], diagnostic: float = math.nan
) -> Estimate:
    """
    Sample mean of a per-row statistic with its standard error.

    MCMC batches use the summed per-walker effective sample size.

    Parameters
    ----------
    batch : SampleBatch
        Batch the values were computed from.
    values : ndarray, shape (len(batch),)
        Statistic per row.
    diagnostic : float, optional
        Value passed through to :attr:`Estimate.diagnostic`.

    Returns
    -------
    Estimate
        Mean, standard error and count.
    """
    return Estimate(
        value=float(np.mean(values)),
        stderr=_standard_error(batch, values),
        n=int(values.size),
        diagnostic=diagnostic,
    )


def empirical_charfn(batch: SampleBatch, t: float) -> Estimate:
    """
    E cos(t S / 2), with the sine mean as an evenness diagnostic.

    Parameters
    ----------
    batch : SampleBatch
        Samples, usually Hua-Pickrell.
    t : float
        Argument.

    Returns
    -------
    Estimate
        Exactly (1, 0) at t = 0.
    """
    half = 0.5 * t * trace_statistic(batch)
    return mean_estimate(batch, np.cos(half), diagnostic=float(np.mean(np.sin(half))))


def empirical_laplace(batch: SampleBatch, t: float) -> Estimate:
    """
    E exp(-t S / 2).

    Parameters
    ----------
    batch : SampleBatch
        Samples, usually inverse-Laguerre.
    t : float
        Nonnegative argument.

    Returns
    -------
    Estimate
        Exactly (1, 0) at t = 0.
    """
    if t < 0.0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return mean_estimate(batch, np.exp(-0.5 * t * trace_statistic(batch)))


def empirical_abs_moment(batch: SampleBatch, h: float, s: float | None = None) -> Estimate:
    """
    E |S|^{2h} for Hua-Pickrell samples.

    The variance of |S|^{2h} is infinite once 4h reaches 2s + 1, so a
    warning is logged from 2h >= s + 0.4 on.

    Parameters
    ----------
    batch : SampleBatch
        Samples.
    h : float
        Half the moment order, > -1/4.
    s : float, optional
        Tail parameter; defaults to the batch's Hua-Pickrell s.

    Returns
    -------
    Estimate
        Sample mean of |S|^{2h}.
    """
    if not h > -0.25:
        raise ValueError(f"h must exceed -1/4, got {h}")
    s = batch.spec.param if s is None else s
    if 2.0 * h >= s + ABS_MOMENT_MARGIN:
        logger.warning(
            "2h=%.3g >= s + %.1f: |S|^{2h} has heavy tails at s=%s, estimate unreliable",
            2.0 * h,
            ABS_MOMENT_MARGIN,
            s,
        )
    return mean_estimate(batch, np.abs(trace_statistic(batch)) ** (2.0 * h))


def empirical_inverse_moment(batch: SampleBatch, k: float) -> Estimate:
    """
    E (sum_j 1/(N x_j))^k for LUE or inverse-Laguerre samples.

    Parameters
    ----------
    batch : SampleBatch
        ``"lue"`` or ``"inverse_laguerre"`` samples.
    k : float
        Moment order.

    Returns
    -------
    Estimate
        Sample mean.
    """
    if batch.spec.kind == "lue":
        values = (1.0 / batch.eigenvalues).mean(axis=1)
    elif batch.spec.kind == "inverse_laguerre":
        values = 0.5 * trace_statistic(batch)
    else:
        raise ValueError(f"need lue or inverse_laguerre samples, got {batch.spec.kind}")
    return mean_estimate(batch, values**k)
