"""
Configuration and result containers for Painleve residual certification.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

import numpy as np
import pandas as pd

Equation = Literal[
    "sigma_p3_inf",
    "p5_finite_N",
    "hankel_sigma",
    "bessel_inf",
    "bessel_finite_N",
]

BoundaryKind = Literal["tau", "h"]

# Small-t samples for the boundary extrapolation
BOUNDARY_POINTS: tuple[float, ...] = (0.02, 0.01, 0.005, 0.0025)

# Acceptance on the normalized residual
RESIDUAL_TOL = 1e-6


@dataclass(frozen=True)
class GridConfig:
    """
    Geometric t-grid for residual reports.

    Parameters
    ----------
    t_min : float
        Smallest grid point. Must be positive. Default: 0.05.
    t_max : float
        Largest grid point. Must exceed t_min. Default: 8.0.
    points : int
        Number of points. Must be at least 2. Default: 16.

    Raises
    ------
    ValueError
        If any validation constraint is violated.
    """

    t_min: float = 0.05
    t_max: float = 8.0
    points: int = 16

    def __post_init__(self) -> None:
        """Validate grid bounds."""
        if not self.t_min > 0.0:
            raise ValueError(f"t_min must be positive, got {self.t_min}")
        if not self.t_max > self.t_min:
            raise ValueError(f"t_max must exceed t_min, got {self.t_max} <= {self.t_min}")
        if self.points < 2:
            raise ValueError(f"points must be at least 2, got {self.points}")

    def grid(self) -> tuple[float, ...]:
        """Grid points in ascending order."""
        return tuple(float(t) for t in np.geomspace(self.t_min, self.t_max, self.points))


@dataclass(frozen=True)
class ResidualValue:
    """
    Residual LHS - RHS of one equation at one point.

    Attributes
    ----------
    t : float
        Argument.
    raw : float
        Unscaled residual.
    normalized : float
        raw / max(1, largest constituent term magnitude).
    scale : float
        The normalizing magnitude.
    err_est : float
        Propagated derivative error, on the normalized scale.
    step : float
        Initial differentiation step used; 0 for closed forms.
    """

    t: float
    raw: float
    normalized: float
    scale: float
    err_est: float = 0.0
    step: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class ResidualReport:
    """
    Residuals of one equation over a t-grid.

    Attributes
    ----------
    equation : Equation
        Which sigma-form equation.
    grid : tuple of float
        Strictly positive, ascending t values.
    residuals : tuple of float
        Raw residuals.
    normalized : tuple of float
        Normalized residuals.
    err_est : tuple of float
        Propagated errors of the normalized residuals.
    max_abs : float
        Largest normalized |residual|.
    diff_step : float
        Largest initial differentiation step used.
    params : dict
        Equation parameters (s or nu, N, alpha, lambda as applicable).
    """

    equation: Equation
    grid: tuple[float, ...]
    residuals: tuple[float, ...]
    normalized: tuple[float, ...]
    err_est: tuple[float, ...]
    max_abs: float
    diff_step: float
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate grid ordering and finiteness."""
        if not all(t > 0.0 for t in self.grid):
            raise ValueError("grid must be strictly positive")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly ascending")
        if not all(math.isfinite(r) for r in self.residuals):
            raise ValueError(f"non-finite residual in {self.equation} report")
        if not len(self.grid) == len(self.residuals) == len(self.normalized):
            raise ValueError("grid and residual lengths differ")

    def passed(self, tol: float = RESIDUAL_TOL) -> bool:
        """True if every normalized residual is within ``tol``."""
        return self.max_abs <= tol

    def to_frame(self) -> pd.DataFrame:
        """One row per grid point: t, residual, normalized, err_est."""
        return pd.DataFrame(
            {
                "t": self.grid,
                "residual": self.residuals,
                "normalized": self.normalized,
                "err_est": self.err_est,
            }
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class BoundaryCheck:
    """
    One extrapolated boundary quantity.

    Attributes
    ----------
    name : str
        Quantity, e.g. ``"tau(0+)"``.
    estimate : float
        Extrapolated value at t = 0+.
    expected : float
        Boundary value.
    tolerance : float
        Accepted deviation.
    passed : bool or None
        None where no boundary value is asserted for the parameter.
    """

    name: str
    estimate: float
    expected: float
    tolerance: float
    passed: bool | None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class BoundaryReport:
    """
    Boundary behaviour of tau^(s) or h^(nu) at t -> 0+.

    Attributes
    ----------
    kind : BoundaryKind
        ``"tau"`` (parameter s) or ``"h"`` (parameter nu).
    param : float
        s or nu.
    points : tuple of float
        Small-t samples used.
    checks : tuple of BoundaryCheck
        Value and derivative checks.
    """

    kind: BoundaryKind
    param: float
    points: tuple[float, ...]
    checks: tuple[BoundaryCheck, ...]

    @property
    def passed(self) -> bool:
        """True unless some asserted check failed."""
        return all(check.passed is not False for check in self.checks)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)
