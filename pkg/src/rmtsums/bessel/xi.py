"""
Log-derivatives xi_N^(nu)(t) = t d/dt log psi_N^(nu)(t).

For N = 1, with z = 2 sqrt(t) and r = K_nu(z)/K_{nu+1}(z),

    xi_1 = -(z/2) r,    r' = -1 + (2 nu + 1) r / z + r^2,

so xi_1 and its t-derivatives follow from a single Bessel-K ratio.
"""

import logging
import math
from typing import Callable

from scipy import special

from rmtsums.bessel.config import BesselParams
from rmtsums.bessel.laplace import psi_N
from rmtsums.charfn.config import TauValue
from rmtsums.charfn.tau import log_derivative_triple
from rmtsums.errors import DomainError
from rmtsums.oracles.config import QuadConfig
from rmtsums.specfun.config import DiffConfig

logger = logging.getLogger(__name__)

_DEFAULT_DIFF = DiffConfig()


def xi_N(
    p: BesselParams,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    quad_cfg: QuadConfig | None = None,
    step_scale: float = 1.0,
    psi_evaluator: Callable[[float], float] | None = None,
) -> TauValue:
    """
    xi_N^(nu)(t) with its first two t-derivatives.

    Parameters
    ----------
    p : BesselParams
        (nu, N, t) with t > 0.
    diff_cfg : DiffConfig
        Step policy for the Richardson differences of log psi_N.
    quad_cfg : QuadConfig, optional
        Quadrature policy forwarded to :func:`psi_N`.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.
    psi_evaluator : callable, optional
        t -> psi_N(t); defaults to the Hankel-quadrature route.

    Returns
    -------
    TauValue
        ``tau`` holds xi_N, ``dtau`` and ``d2tau`` its derivatives.

    Raises
    ------
    DomainError
        If ``t <= 0``.
    """
    if not p.t > 0.0:
        raise DomainError(f"xi_N needs t > 0, got {p.t}")
    if psi_evaluator is None:

        def psi_evaluator(t: float) -> float:
            return psi_N(BesselParams(nu=p.nu, n=p.n, t=t), quad_cfg).value

    value = log_derivative_triple(psi_evaluator, p.t, diff_cfg, step_scale)
    logger.debug(
        "xi_N nu=%s N=%d t=%.6g: %.12g (err %.2e)", p.nu, p.n, p.t, value.tau, value.err_est
    )
    return value


def xi_N1_closed(nu: float, t: float) -> TauValue:
    """
    xi_1^(nu)(t) = -sqrt(t) K_nu(2 sqrt t) / K_{nu+1}(2 sqrt t) and derivatives.

    Examples
    --------
    >>> round(xi_N1_closed(0.5, 0.25).tau, 12)
    -0.25
    """
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    z = 2.0 * math.sqrt(t)
    # Exponential scaling cancels in the ratio
    r = float(special.kve(nu, z) / special.kve(nu + 1.0, z))
    dr = -1.0 + (2.0 * nu + 1.0) * r / z + r * r
    d2r = (2.0 * nu + 1.0) * (dr / z - r / (z * z)) + 2.0 * r * dr

    xi = -0.5 * z * r
    xi_z = -0.5 * (r + z * dr)
    xi_zz = -0.5 * (2.0 * dr + z * d2r)
    dxi = 2.0 * xi_z / z
    d2xi = 4.0 * xi_zz / (z * z) - 4.0 * xi_z / z**3
    return TauValue(t=t, tau=xi, dtau=dxi, d2tau=d2xi, step=0.0)
