"""
Distribution of X(s): densities, complex moments and the rational coefficient
expansion, plus the arithmetic factor entering the conjectured joint moments
of the Riemann zeta function.
"""

from rmtsums.distribution.config import (
    HALFINT_REROUTE,
    DensityMethod,
    DensityValue,
    MomentMethod,
    MomentResult,
)
from rmtsums.distribution.density import EXACT_TAIL_FROM, rho, rho_series
from rmtsums.distribution.moments import (
    abs_moment,
    moment_R,
    moment_R_halfint,
    moment_R_halfint_closed,
    moment_R_integer,
    moment_R_quarter,
    moment_R_series,
    series_vanishing_check,
    taylor_coefficients,
)
from rmtsums.distribution.coefficients import (
    MAX_CLOSED_ORDER,
    coeff_a,
    coeff_a_brute_force,
    coeff_a_from_series,
)
from rmtsums.distribution.arithmetic import arithmetic_factor, conjecture_rhs, primes_up_to

__all__ = [
    "DensityMethod",
    "DensityValue",
    "EXACT_TAIL_FROM",
    "HALFINT_REROUTE",
    "MAX_CLOSED_ORDER",
    "MomentMethod",
    "MomentResult",
    "abs_moment",
    "arithmetic_factor",
    "coeff_a",
    "coeff_a_brute_force",
    "coeff_a_from_series",
    "conjecture_rhs",
    "moment_R",
    "moment_R_halfint",
    "moment_R_halfint_closed",
    "moment_R_integer",
    "moment_R_quarter",
    "moment_R_series",
    "primes_up_to",
    "rho",
    "rho_series",
    "series_vanishing_check",
    "taylor_coefficients",
]
