"""
Residuals of the five sigma-form equations at a point and over a grid.

The log-derivative triples come from Richardson-extrapolated differences of
the relevant log-transform: phi^(s) and phi_N^(s) on the Hua-Pickrell side,
the Hankel determinant F_N for the Laguerre weight (y + t)^lambda y^alpha
e^{-y}, and psi_N^(nu) or its 1/N limit on the inverse-Laguerre side.
"""

import logging
import math
from functools import partial
from typing import Any, Callable, Literal, Sequence

from rmtsums.bessel.config import BesselParams
from rmtsums.bessel.limit import DEFAULT_N_LIST, h_nu_profile
from rmtsums.bessel.xi import xi_N
from rmtsums.charfn.config import TauValue
from rmtsums.charfn.finite import phi_finite_N, phi_finite_N_laguerre
from rmtsums.charfn.tau import log_derivative_triple, tau
from rmtsums.errors import DomainError
from rmtsums.oracles.config import QuadConfig, gram_config
from rmtsums.oracles.moments import hankel_logdet
from rmtsums.painleve.config import Equation, GridConfig, ResidualReport, ResidualValue
from rmtsums.painleve.equations import (
    bessel_finite_terms,
    bessel_inf_terms,
    combine,
    hankel_terms,
    p5_terms,
    propagated_error,
    sigma_p3_terms,
)
from rmtsums.specfun.config import DiffConfig

logger = logging.getLogger(__name__)

PhiRoute = Literal["hankel", "laguerre"]

_DEFAULT_DIFF = DiffConfig()
_DEFAULT_GRID = GridConfig()


def _check_s(s: float) -> None:
    if not s > -0.5:
        raise DomainError(f"s must exceed -1/2, got {s}")


def _from_triple(
    terms_of: Callable[[float, float, float], tuple[float, ...]],
    value: TauValue,
) -> ResidualValue:
    triple = (value.tau, value.dtau, value.d2tau)
    err = propagated_error(terms_of, triple, value.err_est)
    return combine(terms_of(*triple), value.t, err, value.step)


def residual_sigma_p3(
    s: float,
    t: float,
    tau_eval: Callable[[float], TauValue] | None = None,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
) -> ResidualValue:
    """
    Residual of the sigma-Painleve III' equation for tau^(s).

    Parameters
    ----------
    s : float
        Parameter, > -1/2; a nonnegative integer for the default evaluator.
    t : float
        Nonzero argument; the residual is even in t.
    tau_eval : callable, optional
        t -> TauValue. Defaults to :func:`~rmtsums.charfn.tau.tau`.
    diff_cfg : DiffConfig
        Step policy for the default evaluator.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.

    Returns
    -------
    ResidualValue
        Raw and normalized residual.

    Examples
    --------
    >>> residual_sigma_p3(0, 2.0).raw
    0.0
    """
    _check_s(s)
    value = (
        tau(s, t, diff_cfg=diff_cfg, step_scale=step_scale) if tau_eval is None else tau_eval(t)
    )
    return _from_triple(partial(sigma_p3_terms, s, value.t), value)


def residual_p5_finite(
    s: float,
    n: int,
    t: float,
    route: PhiRoute = "hankel",
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
    quad_cfg: QuadConfig | None = None,
) -> ResidualValue:
    """
    Residual of the finite-N Painleve V equation for tau_N^(s).

    Parameters
    ----------
    s : float
        Parameter, > -1/2; a positive integer for ``route="laguerre"``.
    n : int
        Matrix size N.
    t : float
        Nonzero argument.
    route : {"hankel", "laguerre"}
        Evaluator of phi_N^(s).
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.
    quad_cfg : QuadConfig, optional
        Quadrature policy for the Hankel route.

    Returns
    -------
    ResidualValue
        Raw and normalized residual.
    """
    _check_s(s)
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    if route == "laguerre":

        def phi(x: float) -> float:
            return phi_finite_N_laguerre(int(s), n, x).value

    else:

        def phi(x: float) -> float:
            return phi_finite_N(s, n, x, quad_cfg).value

    value = tau(s, t, phi_evaluator=phi, diff_cfg=diff_cfg, step_scale=step_scale)
    return _from_triple(partial(p5_terms, s, n, value.t), value)


def residual_hankel(
    n: int,
    alpha: float,
    lam: float,
    t: float,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
    quad_cfg: QuadConfig | None = None,
) -> ResidualValue:
    """
    Residual of the sigma form satisfied by H_N = t d/dt log F_N(t; alpha).

    Parameters
    ----------
    n : int
        Matrix size N.
    alpha : float
        Laguerre parameter, > -1.
    lam : float
        Exponent of (y + t).
    t : float
        Positive argument.
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.
    quad_cfg : QuadConfig, optional
        Moment quadrature policy; defaults to the tight Gram policy.

    Returns
    -------
    ResidualValue
        Raw and normalized residual; exactly 0 for ``lam == 0``.
    """
    if not alpha > -1.0:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t}")
    if lam == 0.0:
        value = TauValue(t=t, tau=0.0, dtau=0.0, d2tau=0.0, step=0.0)
    else:
        quad = gram_config() if quad_cfg is None else quad_cfg

        def determinant(x: float) -> float:
            return math.exp(hankel_logdet(n, x, alpha, lam, quad))

        value = log_derivative_triple(determinant, t, diff_cfg, step_scale)
    return _from_triple(partial(hankel_terms, n, alpha, lam, t), value)


def residual_bessel_finite(
    nu: float,
    n: int,
    t: float,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
    quad_cfg: QuadConfig | None = None,
) -> ResidualValue:
    """
    Residual of the finite-N Painleve equation for xi_N^(nu).

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    n : int
        Matrix size N, at most 16.
    t : float
        Positive argument.
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.
    quad_cfg : QuadConfig, optional
        Quadrature policy for psi_N.

    Returns
    -------
    ResidualValue
        Raw and normalized residual.
    """
    value = xi_N(BesselParams(nu=nu, n=n, t=t), diff_cfg, quad_cfg, step_scale)
    return _from_triple(partial(bessel_finite_terms, nu, n, t), value)


def residual_bessel_inf(
    nu: float,
    t: float,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
    quad_cfg: QuadConfig | None = None,
) -> ResidualValue:
    """
    Residual of the limiting sigma-Painleve III' equation for h^(nu).

    With a single size in ``n_list`` the raw h_N = nu^2/4 + xi_N is used, so
    an N-sweep shows the residual shrinking; with several sizes h, h' and h''
    are the 1/N-extrapolated values.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    t : float
        Positive argument.
    n_list : sequence of int, default (4, 8, 16)
        Matrix sizes.
    diff_cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial differentiation step.
    quad_cfg : QuadConfig, optional
        Quadrature policy for psi_N.

    Returns
    -------
    ResidualValue
        Raw and normalized residual; ``err_est`` includes the extrapolation error.
    """
    terms_of = partial(bessel_inf_terms, nu, t)
    base = 0.25 * nu * nu
    if len(n_list) == 1:
        xi = xi_N(BesselParams(nu=nu, n=int(n_list[0]), t=t), diff_cfg, quad_cfg, step_scale)
        triple = (base + xi.tau, xi.dtau, xi.d2tau)
        err, step = xi.err_est, xi.step
    else:
        profile = h_nu_profile(nu, t, n_list, diff_cfg, quad_cfg)
        triple = (profile.h, profile.dh, profile.d2h)
        err, step = profile.err_est, 0.0
    return combine(terms_of(*triple), t, propagated_error(terms_of, triple, err), step)


def _evaluator(
    equation: Equation, params: dict[str, Any], diff_cfg: DiffConfig
) -> Callable[[float], ResidualValue]:
    if equation == "sigma_p3_inf":
        return lambda t: residual_sigma_p3(params["s"], t, diff_cfg=diff_cfg)
    if equation == "p5_finite_N":
        route = params.get("route", "hankel")
        return lambda t: residual_p5_finite(params["s"], int(params["n"]), t, route, diff_cfg)
    if equation == "hankel_sigma":
        return lambda t: residual_hankel(
            int(params["n"]), params["alpha"], params["lam"], t, diff_cfg
        )
    if equation == "bessel_finite_N":
        return lambda t: residual_bessel_finite(params["nu"], int(params["n"]), t, diff_cfg)
    if equation == "bessel_inf":
        n_list = tuple(params.get("n_list", DEFAULT_N_LIST))
        return lambda t: residual_bessel_inf(params["nu"], t, n_list, diff_cfg)
    raise DomainError(f"unknown equation {equation!r}")


def residual_report(
    equation: Equation,
    params: dict[str, Any],
    grid: Sequence[float] | None = None,
    grid_cfg: GridConfig = _DEFAULT_GRID,
    diff_cfg: DiffConfig = _DEFAULT_DIFF,
) -> ResidualReport:
    """
    Residuals of one equation over a grid.

    Parameters
    ----------
    equation : Equation
        Equation to certify.
    params : dict
        ``s`` (and ``n``, optional ``route``) for the Hua-Pickrell equations;
        ``n``, ``alpha``, ``lam`` for the Hankel form; ``nu`` (and ``n`` or
        ``n_list``) for the Bessel equations.
    grid : sequence of float, optional
        Explicit t values; defaults to ``grid_cfg.grid()``.
    grid_cfg : GridConfig
        Geometric grid policy.
    diff_cfg : DiffConfig
        Step policy.

    Returns
    -------
    ResidualReport
        Per-point residuals in grid order.
    """
    points = tuple(sorted(float(t) for t in (grid if grid is not None else grid_cfg.grid())))
    evaluate = _evaluator(equation, params, diff_cfg)
    values = [evaluate(t) for t in points]
    report = ResidualReport(
        equation=equation,
        grid=points,
        residuals=tuple(v.raw for v in values),
        normalized=tuple(v.normalized for v in values),
        err_est=tuple(v.err_est for v in values),
        max_abs=max(abs(v.normalized) for v in values),
        diff_step=max(v.step for v in values),
        params={k: v for k, v in params.items() if isinstance(v, (int, float))},
    )
    logger.info(
        "%s residuals %s over %d points: max normalized %.3e",
        equation,
        report.params,
        len(points),
        report.max_abs,
    )
    return report
