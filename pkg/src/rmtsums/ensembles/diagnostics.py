"""
Convergence and goodness-of-fit diagnostics for Monte Carlo batches.
"""

import logging
import math
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special, stats
from statsmodels.tsa.stattools import acf

from rmtsums.bessel.laplace import lue_log_norm
from rmtsums.ensembles.config import FitCheck, SampleBatch
from rmtsums.errors import DiagnosticsError

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.01

# Expected counts below this are pooled into one chi-square cell
MIN_EXPECTED_COUNT = 5.0


def effective_sample_size(chain: ArrayLike) -> float:
    """
    Effective sample size of one chain by the initial positive sequence rule.

    Autocorrelations come from ``statsmodels.tsa.stattools.acf``; pairs
    rho_{2k} + rho_{2k+1} are summed while positive.

    Parameters
    ----------
    chain : array_like
        One scalar trace in draw order.

    Returns
    -------
    float
        ESS in [1, len(chain)]; ``len(chain)`` for a constant chain.

    Examples
    --------
    >>> effective_sample_size([1.0, 1.0, 1.0])
    3.0
    """
    x = np.asarray(chain, dtype=float)
    n = x.size
    if n < 4 or np.ptp(x) == 0.0:
        return float(n)
    rho = acf(x, nlags=n - 1, fft=True)
    tau = -1.0
    for k in range(0, n - 1, 2):
        pair = rho[k] + rho[k + 1]
        if pair <= 0.0:
            break
        tau += 2.0 * pair
    return float(min(max(n / tau, 1.0), n))


def gelman_rubin(chains: ArrayLike) -> float:
    """
    Potential scale reduction factor R-hat across chains.

    Parameters
    ----------
    chains : array_like, shape (m, n)
        m >= 2 chains of n >= 2 draws each.

    Returns
    -------
    float
        sqrt(((n - 1)/n W + B/n) / W); close to 1 for mixed chains.

    Raises
    ------
    ValueError
        If fewer than two chains or draws are given.
    """
    x = np.asarray(chains, dtype=float)
    if x.ndim != 2 or x.shape[0] < 2 or x.shape[1] < 2:
        raise ValueError(f"chains must have shape (m >= 2, n >= 2), got {x.shape}")
    n = x.shape[1]
    within = float(np.mean(np.var(x, axis=1, ddof=1)))
    between = n * float(np.var(np.mean(x, axis=1), ddof=1))
    if within == 0.0:
        return 1.0 if between == 0.0 else math.inf
    pooled = (n - 1) / n * within + between / n
    return math.sqrt(pooled / within)


def batch_chains(batch: SampleBatch, values: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Per-sample statistic arranged as (chain, draws) in merge order.

    Parameters
    ----------
    batch : SampleBatch
        MCMC batch.
    values : ndarray, shape (len(batch),)
        Statistic per row.

    Returns
    -------
    ndarray, shape (n_chains, rows_per_chain)
    """
    n_chains = int(batch.shard.max()) + 1
    return values.reshape(n_chains, -1)


def chain_rhat(batch: SampleBatch) -> float:
    """
    R-hat of an MCMC batch, computed on cos(S / 2) with S the normalized trace.

    The statistic is bounded, so the value is defined for every s > -1/2.
    """
    return gelman_rubin(batch_chains(batch, np.cos(0.5 * batch.eigenvalues.mean(axis=1))))


def require_converged(batch: SampleBatch, max_rhat: float) -> float:
    """
    Return :func:`chain_rhat`, or raise if the chains disagree.

    Raises
    ------
    DiagnosticsError
        If R-hat is not below ``max_rhat``.
    """
    rhat = chain_rhat(batch)
    if not rhat < max_rhat:
        raise DiagnosticsError(
            f"Gelman-Rubin statistic {rhat:.4f} not below {max_rhat} "
            f"(s={batch.spec.param}, N={batch.spec.n}, {int(batch.shard.max()) + 1} chains)"
        )
    logger.debug("Chains converged: R-hat=%.4f", rhat)
    return rhat


def walker_series(batch: SampleBatch, values: NDArray[np.float64]) -> NDArray[np.float64]:
    """Per-sample statistic arranged as (walker, draws), one time series per row."""
    n_chains = int(batch.shard.max()) + 1
    return values.reshape(n_chains * batch.spec.mcmc.n_walkers, -1)


def ks_check(
    samples: ArrayLike,
    cdf: Callable[[NDArray[np.float64]], NDArray[np.float64]],
    alpha: float = DEFAULT_ALPHA,
) -> FitCheck:
    """
    One-sample Kolmogorov-Smirnov test against a closed-form CDF.

    Parameters
    ----------
    samples : array_like
        Scalar samples.
    cdf : callable
        Vectorized CDF.
    alpha : float, default 0.01
        Significance level.

    Returns
    -------
    FitCheck
        ``passed`` if the p-value exceeds ``alpha``.
    """
    result = stats.kstest(np.asarray(samples, dtype=float), cdf)
    check = FitCheck(
        statistic=float(result.statistic),
        p_value=float(result.pvalue),
        passed=bool(result.pvalue > alpha),
    )
    logger.info(
        "KS test: D=%.4g, p=%.4g, passed=%s", check.statistic, check.p_value, check.passed
    )
    return check


def _interval_moment(
    p: float, lo: NDArray[np.float64], hi: NDArray[np.float64]
) -> NDArray[np.float64]:
    # int_lo^hi x^p e^{-x} dx
    a = p + 1.0
    return special.gamma(a) * (special.gammainc(a, hi) - special.gammainc(a, lo))


def lue_pair_probabilities(nu: float, edges: ArrayLike) -> NDArray[np.float64]:
    """
    Cell probabilities of the ordered N = 2 LUE pair x_1 < x_2.

    The joint density (x_2 - x_1)^2 (x_1 x_2)^nu e^{-x_1-x_2} / C_2 expands
    into three separable products; cell (a, b) with a < b covers the full
    rectangle, and a diagonal cell covers half of its square by symmetry.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    edges : array_like
        Bin edges from 0 to inf.

    Returns
    -------
    ndarray, shape (K, K)
        Upper-triangular probabilities summing to 1.
    """
    e = np.asarray(edges, dtype=float)
    lo, hi = e[:-1], e[1:]
    m0, m1, m2 = (_interval_moment(nu + k, lo, hi) for k in range(3))
    full = np.outer(m2, m0) - 2.0 * np.outer(m1, m1) + np.outer(m0, m2)
    cells = np.triu(full, k=1) + 0.5 * np.diag(np.diag(full))
    return cells / math.exp(lue_log_norm(nu, 2))


def lue_pair_chi_square(
    batch: SampleBatch, n_bins: int = 8, alpha: float = DEFAULT_ALPHA
) -> FitCheck:
    """
    Chi-square test of the N = 2 LUE joint eigenvalue density.

    Bins are the Gamma(nu + 2) quantiles; cells with expected count below 5
    are pooled.

    Parameters
    ----------
    batch : SampleBatch
        LUE batch with N = 2.
    n_bins : int, default 8
        Bins per axis.
    alpha : float, default 0.01
        Significance level.

    Returns
    -------
    FitCheck
        Chi-square statistic and p-value.

    Raises
    ------
    ValueError
        If the batch is not an N = 2 LUE batch.
    """
    if batch.spec.kind != "lue" or batch.spec.n != 2:
        raise ValueError(f"need an N=2 lue batch, got {batch.spec.kind} N={batch.spec.n}")
    nu = batch.spec.param
    inner = stats.gamma.ppf(np.linspace(0.0, 1.0, n_bins + 1)[1:-1], nu + 2.0)
    edges = np.concatenate([[0.0], inner, [np.inf]])

    x1 = np.searchsorted(edges, batch.eigenvalues[:, 0], side="right") - 1
    x2 = np.searchsorted(edges, batch.eigenvalues[:, 1], side="right") - 1
    observed = np.zeros((n_bins, n_bins))
    np.add.at(observed, (x1, x2), 1.0)

    iu = np.triu_indices(n_bins)
    expected = len(batch) * lue_pair_probabilities(nu, edges)[iu]
    observed_cells = observed[iu]
    small = expected < MIN_EXPECTED_COUNT
    if small.any():
        expected = np.append(expected[~small], expected[small].sum())
        observed_cells = np.append(observed_cells[~small], observed_cells[small].sum())
    expected *= observed_cells.sum() / expected.sum()

    result = stats.chisquare(observed_cells, expected)
    logger.info(
        "LUE pair chi-square nu=%s: stat=%.4g over %d cells, p=%.4g",
        nu,
        result.statistic,
        observed_cells.size,
        result.pvalue,
    )
    return FitCheck(
        statistic=float(result.statistic),
        p_value=float(result.pvalue),
        passed=bool(result.pvalue > alpha),
    )
