"""
Parameters and result containers for the Laguerre / inverse-Laguerre objects.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

LaplaceMethod = Literal["hankel_quadrature", "closed_form_n1", "monte_carlo"]

# Largest N for the quadrature route
MAX_QUADRATURE_N = 16


@dataclass(frozen=True)
class BesselParams:
    """
    Point (nu, N, t) at which psi_N^(nu) and xi_N^(nu) are evaluated.

    Parameters
    ----------
    nu : float
        Laguerre parameter. Must exceed -1.
    n : int
        Matrix size N. Must be positive.
    t : float
        Laplace variable. Must be nonnegative.

    Raises
    ------
    ValueError
        If any validation constraint is violated.
    """

    nu: float
    n: int
    t: float = 0.0

    def __post_init__(self) -> None:
        """Validate parameters."""
        if not self.nu > -1.0:
            raise ValueError(f"nu must exceed -1, got {self.nu}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not (self.t >= 0.0 and math.isfinite(self.t)):
            raise ValueError(f"t must be finite and nonnegative, got {self.t}")


@dataclass(frozen=True)
class LaplaceValue:
    """
    Evaluation of psi_N^(nu)(t) = E exp(-t sum_j 1/(N x_j)).

    Attributes
    ----------
    t : float
        Argument.
    value : float
        Laplace transform value in (0, 1].
    err_est : float
        Nonnegative error estimate (standard error for Monte Carlo).
    method : LaplaceMethod
        Evaluation route.
    """

    t: float
    value: float
    err_est: float
    method: LaplaceMethod

    def __post_init__(self) -> None:
        """Validate value range."""
        if not (math.isfinite(self.value) and 0.0 < self.value <= 1.0 + 1e-9):
            raise ValueError(f"value must lie in (0, 1], got {self.value} at t={self.t}")
        if not self.err_est >= 0.0:
            raise ValueError(f"err_est must be nonnegative, got {self.err_est}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class HEstimate:
    """
    N-extrapolated h^(nu)(t) = nu^2/4 + xi^(nu)(t) and its derivatives.

    Attributes
    ----------
    nu : float
        Laguerre parameter.
    t : float
        Argument.
    h, dh, d2h : float
        Extrapolated h, h' and h''.
    err_est : float
        Largest last-increment error among the three tableaux.
    n_list : tuple of int
        Matrix sizes used.
    xi_by_n : tuple of tuple of float
        Per-N raw (xi_N, xi_N', xi_N'').
    ols_intercept : float
        Intercept of the least-squares fit of xi_N against 1/N, plus nu^2/4.
    ols_stderr : float
        Standard error of that intercept.
    monotone : bool
        True if every tableau has shrinking increments.
    """

    nu: float
    t: float
    h: float
    dh: float
    d2h: float
    err_est: float
    n_list: tuple[int, ...]
    xi_by_n: tuple[tuple[float, float, float], ...] = field(default_factory=tuple)
    ols_intercept: float = math.nan
    ols_stderr: float = math.nan
    monotone: bool = True

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)
