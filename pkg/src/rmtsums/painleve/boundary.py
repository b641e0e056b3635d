"""
Boundary values at t -> 0+ by polynomial extrapolation from small-t samples.

    tau^(s)(0) = 0 (s > 0),            tau^(s)'(0) = 0 (s > 1/2),
    h^(nu)(0) = nu^2/4 (nu > 0),       h^(nu)'(0) = -1/nu (nu > 1).

Outside those ranges the extrapolated values are reported without a verdict.
"""

import logging
import math
from typing import Sequence

from rmtsums.bessel.limit import h_nu_profile
from rmtsums.charfn.tau import tau
from rmtsums.errors import DomainError
from rmtsums.painleve.config import (
    BOUNDARY_POINTS,
    BoundaryCheck,
    BoundaryKind,
    BoundaryReport,
)
from rmtsums.specfun.extrapolation import polynomial_limit

logger = logging.getLogger(__name__)

TAU_VALUE_TOL = 1e-6
TAU_SLOPE_TOL = 1e-5
H_VALUE_TOL = 1e-5
H_SLOPE_TOL = 1e-4

# Sizes for the h^(nu) profile at small t; xi_N(0) and xi_N'(0) do not depend on N
BOUNDARY_N_LIST: tuple[int, ...] = (4, 8)


def _check(
    name: str,
    samples: Sequence[float],
    points: Sequence[float],
    expected: float,
    tol: float,
    asserted: bool,
) -> BoundaryCheck:
    estimate, _ = polynomial_limit(points, samples)
    passed = abs(estimate - expected) <= tol if asserted else None
    return BoundaryCheck(
        name=name, estimate=estimate, expected=expected, tolerance=tol, passed=passed
    )


def boundary_report(
    kind: BoundaryKind,
    param: float,
    points: Sequence[float] = BOUNDARY_POINTS,
    n_list: Sequence[int] = BOUNDARY_N_LIST,
) -> BoundaryReport:
    """
    Extrapolate tau, tau' (kind "tau") or h, h' (kind "h") to t = 0+.

    Parameters
    ----------
    kind : {"tau", "h"}
        Which function.
    param : float
        s (a nonnegative integer) for ``"tau"``; nu > -1 for ``"h"``.
    points : sequence of float
        Small positive sample points.
    n_list : sequence of int
        Matrix sizes for the h^(nu) profile.

    Returns
    -------
    BoundaryReport
        Value and derivative checks.

    Examples
    --------
    >>> boundary_report("tau", 0).passed
    True
    """
    pts = tuple(float(t) for t in points)
    if len(pts) < 2 or not all(t > 0.0 for t in pts):
        raise DomainError(f"boundary points must be at least two positive values, got {pts}")

    if kind == "tau":
        if param < 0 or int(param) != param:
            raise DomainError(f"tau boundary needs a nonnegative integer s, got {param}")
        values = [tau(int(param), t) for t in pts]
        checks = (
            _check("tau(0+)", [v.tau for v in values], pts, 0.0, TAU_VALUE_TOL, param > 0),
            _check("tau'(0+)", [v.dtau for v in values], pts, 0.0, TAU_SLOPE_TOL, param > 0.5),
        )
    elif kind == "h":
        if not param > -1.0:
            raise DomainError(f"nu must exceed -1, got {param}")
        profiles = [h_nu_profile(param, t, n_list) for t in pts]
        slope = -1.0 / param if param > 0.0 else math.nan
        checks = (
            _check(
                "h(0+)", [p.h for p in profiles], pts, 0.25 * param**2, H_VALUE_TOL, param > 0.0
            ),
            _check("h'(0+)", [p.dh for p in profiles], pts, slope, H_SLOPE_TOL, param > 1.0),
        )
    else:
        raise DomainError(f"unknown boundary kind {kind!r}")

    report = BoundaryReport(kind=kind, param=float(param), points=pts, checks=checks)
    for check in checks:
        logger.info(
            "boundary %s=%s %s: %.3e (expected %.6g)",
            kind,
            param,
            check.name,
            check.estimate,
            check.expected,
        )
    return report
