"""
Result containers for densities and moments of X(s).
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Literal

MomentMethod = Literal[
    "closed_s0",
    "hyp_s1",
    "hyp_s2",
    "general_series",
    "lhopital",
    "integer_taylor",
]

DensityMethod = Literal["cauchy", "closed_s1", "hyp_s2", "general_series"]

# Half-integer points closer than this are rerouted to the limit formula
HALFINT_REROUTE = 1e-6


@dataclass(frozen=True)
class MomentResult:
    """
    Value of R(s, h) or of the absolute moment E|X(s)|^{2h}.

    Attributes
    ----------
    s : int
        Nonnegative integer parameter.
    h : complex
        Moment exponent.
    value : complex
        Computed value; real and positive for real h in the strip.
    method : MomentMethod
        Evaluation route.
    err_est : float
        Nonnegative absolute error estimate.
    """

    s: int
    h: complex
    value: complex
    method: MomentMethod
    err_est: float

    def __post_init__(self) -> None:
        """Validate error estimate."""
        if not (self.err_est >= 0.0 and math.isfinite(self.err_est)):
            raise ValueError(f"err_est must be finite and nonnegative, got {self.err_est}")

    @property
    def real(self) -> float:
        """Real part of the value."""
        return complex(self.value).real

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class DensityValue:
    """
    Density rho^(s)(x) with its evaluation route.

    Attributes
    ----------
    x : float
        Point.
    rho : float
        Density value, nonnegative.
    method : DensityMethod
        Evaluation route.
    err_est : float
        Nonnegative absolute error estimate.
    """

    x: float
    rho: float
    method: DensityMethod
    err_est: float

    def __post_init__(self) -> None:
        """Validate density value."""
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise ValueError(f"rho must be nonnegative, got {self.rho} at x={self.x}")
        if not self.err_est >= 0.0:
            raise ValueError(f"err_est must be nonnegative, got {self.err_est}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)
