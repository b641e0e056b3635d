"""
Log-derivatives tau(t) = t d/dt log f(t) and their t-derivatives.

With g = log f: tau = t g', tau' = g' + t g'', tau'' = 2 g'' + t g'''. The
derivatives of g come from Ridders-extrapolated central differences whose
stencils stay on the side of t away from 0, where f may not be smooth.
"""

import logging
from typing import Callable

from rmtsums.charfn.config import TauValue
from rmtsums.charfn.exact import phi_exact
from rmtsums.errors import DomainError
from rmtsums.specfun.config import DiffConfig
from rmtsums.specfun.differentiation import log_derivatives

logger = logging.getLogger(__name__)

_DEFAULT_DIFF = DiffConfig()


def log_derivative_triple(
    func: Callable[[float], float],
    t: float,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
) -> TauValue:
    """
    (tau, tau', tau'') for tau = t d/dt log func at t > 0.

    Parameters
    ----------
    func : callable
        Positive, smooth on (0, inf).
    t : float
        Positive evaluation point.
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.

    Returns
    -------
    TauValue
        Log-derivative triple with the step used and a max-norm error estimate.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    (g1, g2, g3), step = log_derivatives(func, t, diff_cfg, step_scale)
    tau = t * g1.value
    dtau = g1.value + t * g2.value
    d2tau = 2.0 * g2.value + t * g3.value
    err = max(t * g1.err_est, g1.err_est + t * g2.err_est, 2.0 * g2.err_est + t * g3.err_est)
    return TauValue(t=t, tau=tau, dtau=dtau, d2tau=d2tau, step=step, err_est=err)


def tau(
    s: float,
    t: float,
    phi_evaluator: Callable[[float], float] | None = None,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
) -> TauValue:
    """
    tau^(s)(t) = t d/dt log phi(t), with tau' and tau''.

    Parameters
    ----------
    s : float
        Parameter; with the default evaluator it must be a nonnegative integer.
    t : float
        Nonzero argument. tau is even, so tau' is odd and tau'' even.
    phi_evaluator : callable, optional
        t -> phi(t). Defaults to the limit function ``phi_exact(s, t).value``;
        pass a finite-N evaluator for tau_N.
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.

    Returns
    -------
    TauValue
        For the default evaluator and s = 0, the exact (-|t|/2, -sgn(t)/2, 0).

    Raises
    ------
    DomainError
        If ``t == 0``.
    AccuracyError
        If the differentiation step underflows.

    Examples
    --------
    >>> tau(0, 2.0).tau
    -1.0
    """
    if t == 0.0:
        raise DomainError("tau is defined for nonzero t only")
    a = abs(t)
    sign = 1.0 if t > 0 else -1.0
    if phi_evaluator is None:
        if s == 0:
            return TauValue(t=t, tau=-0.5 * a, dtau=-0.5 * sign, d2tau=0.0, step=0.0)

        def phi_evaluator(x: float) -> float:
            return phi_exact(int(s), x).value

    value = log_derivative_triple(phi_evaluator, a, diff_cfg, step_scale)
    logger.debug("tau s=%s t=%.6g: %.12g (err %.2e)", s, t, value.tau, value.err_est)
    return TauValue(
        t=t,
        tau=value.tau,
        dtau=sign * value.dtau,
        d2tau=value.d2tau,
        step=value.step,
        err_est=value.err_est,
    )
