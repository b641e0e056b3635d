"""
Extrapolation to a limit from a sequence of evaluations.

Two uses: limits in 1/N of finite-N quantities (Neville tableau on arbitrary
nodes) and boundary values at t -> 0+ (polynomial fit through small-t
samples).
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from rmtsums.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtrapolationResult:
    """
    Limit estimate with its tableau.

    Attributes
    ----------
    value : float
        Extrapolated limit (highest-order tableau entry).
    err_est : float
        Increment between the last two diagonal entries.
    diagonal : tuple of float
        Successive diagonal entries; diagonal[0] is the raw last sample.
    monotone : bool
        True if diagonal increments shrink in magnitude.
    """

    value: float
    err_est: float
    diagonal: tuple[float, ...] = field(default_factory=tuple)
    monotone: bool = True

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


def richardson_limit(step_ratio: float, values: Sequence[float]) -> float:
    """
    Richardson limit of values computed at geometrically shrinking steps.

    ``values[i]`` is assumed to carry an error expansion in powers of
    ``step_ratio ** -i``.

    Examples
    --------
    >>> richardson_limit(2.0, [1.5, 1.25, 1.125])
    1.0
    """
    if not values:
        raise DomainError("richardson_limit requires at least one value")
    last_level = list(values)
    for m in range(1, len(values)):
        mult = step_ratio**m
        last_level = [
            (mult * last_level[i + 1] - last_level[i]) / (mult - 1.0)
            for i in range(len(last_level) - 1)
        ]
    return float(last_level[0])


def neville_limit(nodes: Sequence[float], values: Sequence[float]) -> ExtrapolationResult:
    """
    Value at 0 of the interpolating polynomial through (nodes, values).

    With nodes x_i = 1/N_i this is Richardson extrapolation in 1/N on an
    arbitrary N sequence. The first column of the tableau is the two-point
    linear model, later columns add higher powers of 1/N.

    Parameters
    ----------
    nodes : sequence of float
        Distinct nonzero abscissae, ordered so the last is closest to 0.
    values : sequence of float
        Samples at the nodes.

    Returns
    -------
    ExtrapolationResult
        Limit, last increment as error estimate, and the monotonicity flag.
    """
    if len(nodes) != len(values):
        raise DomainError(f"nodes and values differ in length: {len(nodes)} vs {len(values)}")
    if len(nodes) < 2:
        raise DomainError("neville_limit requires at least two samples")
    x = [float(v) for v in nodes]
    if len(set(x)) != len(x):
        raise DomainError("neville_limit requires distinct nodes")

    table = [float(v) for v in values]
    n = len(x)
    diagonal = [table[-1]]
    for j in range(1, n):
        table = [
            table[i + 1] + (table[i + 1] - table[i]) * x[i + j] / (x[i] - x[i + j])
            for i in range(n - j)
        ]
        diagonal.append(table[-1])

    increments = [abs(b - a) for a, b in zip(diagonal, diagonal[1:])]
    monotone = all(later <= earlier for earlier, later in zip(increments, increments[1:]))
    if not monotone:
        logger.warning("Non-monotone extrapolation increments: %s", increments)
    return ExtrapolationResult(
        value=diagonal[-1],
        err_est=increments[-1],
        diagonal=tuple(diagonal),
        monotone=monotone,
    )


def polynomial_limit(
    points: Sequence[float], values: Sequence[float], degree: int | None = None
) -> tuple[float, float]:
    """
    Intercept and slope at 0 of a polynomial fit through (points, values).

    Parameters
    ----------
    points : sequence of float
        Sample abscissae approaching 0.
    values : sequence of float
        Samples.
    degree : int, optional
        Polynomial degree; interpolating (len(points) - 1) by default.

    Returns
    -------
    tuple of (float, float)
        Extrapolated value and first derivative at 0.
    """
    t = np.asarray(points, dtype=float)
    y = np.asarray(values, dtype=float)
    deg = len(t) - 1 if degree is None else degree
    if deg < 1 or deg > len(t) - 1:
        raise DomainError(f"degree {deg} unsupported for {len(t)} points")
    vander = np.vander(t, deg + 1, increasing=True)
    coeffs, *_ = np.linalg.lstsq(vander, y, rcond=None)
    return float(coeffs[0]), float(coeffs[1])
