"""
Large-N limit h^(nu)(t) = nu^2/4 + lim_N xi_N^(nu)(t).

The limit is reached by a Neville tableau in 1/N; the first column is the
two-point c/N model. No rate of convergence is known, so the tableau's
increments are monitored and a non-shrinking sequence is flagged.
"""

import logging
import math
from typing import Sequence

import numpy as np
import statsmodels.api as sm

from rmtsums.bessel.config import BesselParams, HEstimate
from rmtsums.bessel.xi import xi_N
from rmtsums.errors import DomainError
from rmtsums.oracles.config import QuadConfig
from rmtsums.specfun.config import DiffConfig, EvalResult
from rmtsums.specfun.extrapolation import neville_limit

logger = logging.getLogger(__name__)

DEFAULT_N_LIST: tuple[int, ...] = (4, 8, 16)

_DEFAULT_DIFF = DiffConfig()


def _check_n_list(n_list: Sequence[int]) -> list[int]:
    ns = [int(n) for n in n_list]
    if len(ns) < 2:
        raise DomainError(f"N_list needs at least two entries, got {ns}")
    if any(b <= a for a, b in zip(ns, ns[1:])) or ns[0] < 1:
        raise DomainError(f"N_list must be positive and strictly ascending, got {ns}")
    return ns


def _xi_table(
    nu: float,
    t: float,
    ns: list[int],
    diff_cfg: DiffConfig,
    quad_cfg: QuadConfig | None,
) -> list[tuple[float, float, float]]:
    table = []
    for n in ns:
        value = xi_N(BesselParams(nu=nu, n=n, t=t), diff_cfg, quad_cfg)
        table.append((value.tau, value.dtau, value.d2tau))
    return table


def h_nu_estimate(
    nu: float,
    t: float,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    quad_cfg: QuadConfig | None = None,
) -> EvalResult:
    """
    h^(nu)(t) extrapolated in 1/N from xi_N over ``n_list``.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    t : float
        Positive argument.
    n_list : sequence of int, default (4, 8, 16)
        Strictly ascending matrix sizes, at least two.
    diff_cfg : DiffConfig
        Step policy for xi_N.
    quad_cfg : QuadConfig, optional
        Quadrature policy for psi_N.

    Returns
    -------
    EvalResult
        ``err_est`` is the last tableau increment; ``flags`` carries
        ``"non_monotone_convergence"`` when the increments do not shrink.
    """
    ns = _check_n_list(n_list)
    BesselParams(nu=nu, n=ns[0], t=t)
    values = [row[0] for row in _xi_table(nu, t, ns, diff_cfg, quad_cfg)]
    limit = neville_limit([1.0 / n for n in ns], values)
    flags = () if limit.monotone else ("non_monotone_convergence",)
    return EvalResult(
        value=0.25 * nu * nu + limit.value,
        err_est=limit.err_est,
        terms_used=len(ns),
        flags=flags,
    )


def _ols_intercept(ns: list[int], values: list[float]) -> tuple[float, float]:
    if len(ns) < 3:
        logger.debug("OLS on %d sizes has no residual degrees of freedom", len(ns))
        return math.nan, math.nan
    design = sm.add_constant(np.array([1.0 / n for n in ns]))
    model = sm.OLS(np.asarray(values), design).fit()
    return float(model.params[0]), float(model.bse[0])


def h_nu_profile(
    nu: float,
    t: float,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    quad_cfg: QuadConfig | None = None,
) -> HEstimate:
    """
    h, h' and h'' extrapolated in 1/N, with the per-N raw values.

    One Neville tableau per derivative order. The OLS fit of xi_N against
    1/N (statsmodels, with intercept) gives a secondary estimate of the
    limit and its standard error.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    t : float
        Positive argument.
    n_list : sequence of int, default (4, 8, 16)
        Strictly ascending matrix sizes.
    diff_cfg : DiffConfig
        Step policy for xi_N.
    quad_cfg : QuadConfig, optional
        Quadrature policy for psi_N.

    Returns
    -------
    HEstimate
        Extrapolated triple, diagnostics and per-N table.
    """
    ns = _check_n_list(n_list)
    BesselParams(nu=nu, n=ns[0], t=t)
    table = _xi_table(nu, t, ns, diff_cfg, quad_cfg)
    nodes = [1.0 / n for n in ns]
    limits = [neville_limit(nodes, [row[i] for row in table]) for i in range(3)]
    intercept, stderr = _ols_intercept(ns, [row[0] for row in table])
    base = 0.25 * nu * nu

    logger.info(
        "h_nu nu=%s t=%.6g over N=%s: h=%.12g (err %.2e)",
        nu,
        t,
        ns,
        base + limits[0].value,
        limits[0].err_est,
    )
    return HEstimate(
        nu=nu,
        t=t,
        h=base + limits[0].value,
        dh=limits[1].value,
        d2h=limits[2].value,
        err_est=max(limit.err_est for limit in limits),
        n_list=tuple(ns),
        xi_by_n=tuple(table),
        ols_intercept=base + intercept,
        ols_stderr=stderr,
        monotone=all(limit.monotone for limit in limits),
    )
