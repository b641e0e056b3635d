"""
Configuration for quadrature oracles.

Defines the tolerance policy shared by every adaptive integral in the package.
"""

import math
from dataclasses import dataclass

# Tighter policy for moment matrices feeding third derivatives
GRAM_ABS_TOL = 1e-14
GRAM_REL_TOL = 1e-13


@dataclass(frozen=True)
class QuadConfig:
    """
    Tolerance policy for adaptive Gauss-Kronrod quadrature.

    Parameters
    ----------
    abs_tol : float
        Absolute error target. Must lie in (0, 1e-4]. Default: 1e-8.
    rel_tol : float
        Relative error target. Must lie in (0, 1e-4]. Default: 1e-8.
    max_subdivisions : int
        Maximum number of subintervals. Must be positive. Default: 500.
    upper_cutoff : float
        Minimum truncation point for integrals over (0, inf) against e^{-y}.
        Must be positive; :meth:`cutoff_for_power` raises it further when the
        polynomial power in use requires. Default: 60.

    Raises
    ------
    ValueError
        If any validation constraint is violated.

    Examples
    --------
    >>> cfg = QuadConfig()
    >>> cfg = QuadConfig(abs_tol=1e-12, rel_tol=1e-12)
    """

    abs_tol: float = 1e-8
    rel_tol: float = 1e-8
    max_subdivisions: int = 500
    upper_cutoff: float = 60.0

    def __post_init__(self) -> None:
        """Validate tolerances."""
        if not 0.0 < self.abs_tol <= 1e-4:
            raise ValueError(f"abs_tol must be in (0, 1e-4], got {self.abs_tol}")
        if not 0.0 < self.rel_tol <= 1e-4:
            raise ValueError(f"rel_tol must be in (0, 1e-4], got {self.rel_tol}")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be positive, got {self.max_subdivisions}")
        if not self.upper_cutoff > 0.0:
            raise ValueError(f"upper_cutoff must be positive, got {self.upper_cutoff}")

    def cutoff_for_power(self, power: float) -> float:
        """
        Truncation point c with e^{-c} c^power < abs_tol.

        Parameters
        ----------
        power : float
            Largest polynomial power multiplying e^{-y} in the integrand.

        Returns
        -------
        float
            At least ``upper_cutoff``.
        """
        target = math.log(self.abs_tol) - 2.0
        c = max(self.upper_cutoff, power + 1.0)
        while max(power, 0.0) * math.log(c) - c > target:
            c += 5.0
        return c


def gram_config() -> QuadConfig:
    """Quadrature policy for moment matrices that are differentiated numerically."""
    return QuadConfig(abs_tol=GRAM_ABS_TOL, rel_tol=GRAM_REL_TOL, max_subdivisions=2000)
