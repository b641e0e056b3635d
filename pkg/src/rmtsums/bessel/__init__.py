"""
Laguerre / inverse-Laguerre side: the Laplace transforms psi_N^(nu) of the
scaled inverse trace, their log-derivatives xi_N, the large-N limit h^(nu),
the Inverse-Gamma law of the exchangeable entries and the Bessel kernel.
"""

from rmtsums.bessel.config import (
    MAX_QUADRATURE_N,
    BesselParams,
    HEstimate,
    LaplaceMethod,
    LaplaceValue,
)
from rmtsums.bessel.laplace import (
    inverse_laguerre_log_norm,
    laplace_gram,
    lue_log_norm,
    psi_N,
    psi_N1_closed,
)
from rmtsums.bessel.xi import xi_N, xi_N1_closed
from rmtsums.bessel.limit import DEFAULT_N_LIST, h_nu_estimate, h_nu_profile
from rmtsums.bessel.inverse_gamma import (
    inverse_gamma_moment,
    inverse_gamma_pdf,
    uniform_moment_bound,
)
from rmtsums.bessel.kernel import bessel_kernel, bessel_kernel_diagonal

__all__ = [
    "BesselParams",
    "DEFAULT_N_LIST",
    "HEstimate",
    "LaplaceMethod",
    "LaplaceValue",
    "MAX_QUADRATURE_N",
    "bessel_kernel",
    "bessel_kernel_diagonal",
    "h_nu_estimate",
    "h_nu_profile",
    "inverse_gamma_moment",
    "inverse_gamma_pdf",
    "inverse_laguerre_log_norm",
    "laplace_gram",
    "lue_log_norm",
    "psi_N",
    "psi_N1_closed",
    "uniform_moment_bound",
    "xi_N",
    "xi_N1_closed",
]
