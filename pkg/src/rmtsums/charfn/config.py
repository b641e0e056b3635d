"""
Result containers for characteristic functions and their log-derivatives.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Literal

CharFnMethod = Literal[
    "closed_form_s0",
    "bessel_det",
    "small_t_series",
    "hankel_det",
    "laguerre_det",
    "elementary",
]

# Values may exceed 1 by rounding only
VALUE_SLACK = 1e-9


@dataclass(frozen=True)
class CharFnValue:
    """
    Evaluation of phi^(s)(t) or phi_N^(s)(t).

    Attributes
    ----------
    t : float
        Argument.
    value : float
        Characteristic function value in (0, 1].
    method : CharFnMethod
        Evaluation route.
    err_est : float
        Nonnegative absolute error estimate.
    """

    t: float
    value: float
    method: CharFnMethod
    err_est: float

    def __post_init__(self) -> None:
        """Validate value range."""
        if not (math.isfinite(self.value) and 0.0 < self.value <= 1.0 + VALUE_SLACK):
            raise ValueError(f"value must lie in (0, 1], got {self.value} at t={self.t}")
        if not self.err_est >= 0.0:
            raise ValueError(f"err_est must be nonnegative, got {self.err_est}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class TauValue:
    """
    Log-derivative t d/dt log f(t) with its first two derivatives.

    Shared by tau^(s) (f = phi) and xi_N^(nu) (f = psi_N).

    Attributes
    ----------
    t : float
        Nonzero argument.
    tau : float
        t (log f)'(t).
    dtau : float
        First derivative of tau.
    d2tau : float
        Second derivative of tau.
    step : float
        Initial differentiation step; 0 for closed forms.
    err_est : float
        Combined error estimate of (tau, dtau, d2tau) in max-norm.
    """

    t: float
    tau: float
    dtau: float
    d2tau: float
    step: float
    err_est: float = 0.0

    def __post_init__(self) -> None:
        """Validate entries."""
        if self.t == 0.0:
            raise ValueError("t must be nonzero")
        if not all(math.isfinite(v) for v in (self.tau, self.dtau, self.d2tau)):
            raise ValueError(f"non-finite log-derivative at t={self.t}")
        if self.step < 0.0:
            raise ValueError(f"step must be nonnegative, got {self.step}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)
