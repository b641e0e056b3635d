"""
Characteristic functions of X(s) and the scaled Hua-Pickrell trace.

Exact phi^(s) for integer s (closed form, composition series, Bessel
determinant), finite-N phi_N^(s) by three independent routes, the
log-derivatives tau and the correlation kernel of C^(s).
"""

from rmtsums.charfn.config import CharFnMethod, CharFnValue, TauValue
from rmtsums.charfn.kernel import (
    DIAGONAL_THRESHOLD,
    kernel_Cs,
    kernel_r,
    kernel_sine,
    kernel_t,
    sine_pushforward_gap,
)
from rmtsums.charfn.series import (
    normalized_coefficient,
    normalized_coefficients,
    phi_series,
    prefactor_v,
)
from rmtsums.charfn.exact import phi_exact
from rmtsums.charfn.finite import (
    MAX_HANKEL_N,
    c_n_constant,
    phi_finite_N,
    phi_finite_N_elementary,
    phi_finite_N_laguerre,
)
from rmtsums.charfn.tau import log_derivative_triple, tau

__all__ = [
    "CharFnMethod",
    "CharFnValue",
    "DIAGONAL_THRESHOLD",
    "MAX_HANKEL_N",
    "TauValue",
    "c_n_constant",
    "kernel_Cs",
    "kernel_r",
    "kernel_sine",
    "kernel_t",
    "log_derivative_triple",
    "normalized_coefficient",
    "normalized_coefficients",
    "phi_exact",
    "phi_finite_N",
    "phi_finite_N_elementary",
    "phi_finite_N_laguerre",
    "phi_series",
    "prefactor_v",
    "sine_pushforward_gap",
    "tau",
]
