"""
Residual certification of the sigma-form Painleve equations satisfied by the
log-derivatives tau^(s), tau_N^(s), H_N, xi_N^(nu) and h^(nu), and of their
boundary values at t -> 0+.
"""

from rmtsums.painleve.config import (
    BOUNDARY_POINTS,
    RESIDUAL_TOL,
    BoundaryCheck,
    BoundaryKind,
    BoundaryReport,
    Equation,
    GridConfig,
    ResidualReport,
    ResidualValue,
)
from rmtsums.painleve.equations import (
    bessel_finite_terms,
    bessel_inf_terms,
    combine,
    hankel_terms,
    p5_terms,
    propagated_error,
    sigma_p3_terms,
)
from rmtsums.painleve.residuals import (
    PhiRoute,
    residual_bessel_finite,
    residual_bessel_inf,
    residual_hankel,
    residual_p5_finite,
    residual_report,
    residual_sigma_p3,
)
from rmtsums.painleve.boundary import boundary_report

__all__ = [
    "BOUNDARY_POINTS",
    "BoundaryCheck",
    "BoundaryKind",
    "BoundaryReport",
    "Equation",
    "GridConfig",
    "PhiRoute",
    "RESIDUAL_TOL",
    "ResidualReport",
    "ResidualValue",
    "bessel_finite_terms",
    "bessel_inf_terms",
    "boundary_report",
    "combine",
    "hankel_terms",
    "p5_terms",
    "propagated_error",
    "residual_bessel_finite",
    "residual_bessel_inf",
    "residual_hankel",
    "residual_p5_finite",
    "residual_report",
    "residual_sigma_p3",
    "sigma_p3_terms",
]
