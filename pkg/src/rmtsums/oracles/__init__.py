"""
Independent quadrature evaluators used to validate series and determinant formulas.

Adaptive Gauss-Kronrod wrappers, moments and Hankel determinants of deformed
Laguerre weights, closed-form ensemble normalizers with brute-force checks,
and Fourier inversion of the characteristic function.
"""

from rmtsums.oracles.config import GRAM_ABS_TOL, GRAM_REL_TOL, QuadConfig, gram_config
from rmtsums.oracles.quadrature import adaptive_quad, adaptive_quad_vec
from rmtsums.oracles.moments import (
    gram_logdet,
    gram_matrix,
    hankel_logdet,
    hankel_matrix,
    hankel_moment,
)
from rmtsums.oracles.identities import (
    MAX_BRUTE_FORCE_N,
    WinnCheck,
    aomoto,
    aomoto_by_quadrature,
    laguerre_selberg_log,
    log_selberg_norm,
    selberg_by_quadrature,
    selberg_norm,
    winn_identity_check_N1,
)

# Imported last: inversion depends on rmtsums.charfn, which depends on the modules above
from rmtsums.oracles.inversion import (  # noqa: E402
    density_by_inversion,
    fourier_cutoff,
    moment_by_quadrature,
    probability_mass_by_inversion,
)

__all__ = [
    "GRAM_ABS_TOL",
    "GRAM_REL_TOL",
    "MAX_BRUTE_FORCE_N",
    "QuadConfig",
    "WinnCheck",
    "adaptive_quad",
    "adaptive_quad_vec",
    "aomoto",
    "aomoto_by_quadrature",
    "density_by_inversion",
    "fourier_cutoff",
    "gram_config",
    "gram_logdet",
    "gram_matrix",
    "hankel_logdet",
    "hankel_matrix",
    "hankel_moment",
    "laguerre_selberg_log",
    "log_selberg_norm",
    "moment_by_quadrature",
    "probability_mass_by_inversion",
    "selberg_by_quadrature",
    "selberg_norm",
    "winn_identity_check_N1",
]
