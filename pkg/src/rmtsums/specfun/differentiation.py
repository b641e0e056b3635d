"""
Numerical derivatives by Ridders' extrapolation of central differences.

Each tableau row evaluates a central stencil at a smaller step; each column
removes the next even power of the step from the truncation error. Function
values are memoized per call, so overlapping stencils across rows and
derivative orders are evaluated once.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable

from rmtsums.errors import AccuracyError, DomainError
from rmtsums.specfun.config import DiffConfig

logger = logging.getLogger(__name__)

_DEFAULT_DIFF = DiffConfig()

# Central stencils: order -> (reach in steps, [(offset, weight)], power of h)
_STENCILS: dict[int, tuple[int, list[tuple[int, float]], int]] = {
    1: (1, [(1, 0.5), (-1, -0.5)], 1),
    2: (1, [(1, 1.0), (0, -2.0), (-1, 1.0)], 2),
    3: (2, [(2, 0.5), (1, -1.0), (-1, 1.0), (-2, -0.5)], 3),
}


@dataclass(frozen=True)
class DerivativeEstimate:
    """
    Extrapolated derivative.

    Attributes
    ----------
    value : float
        Derivative estimate.
    err_est : float
        Difference between the best estimate and its lower-order neighbours.
    step : float
        Initial step of the tableau.
    """

    value: float
    err_est: float
    step: float

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


class MemoizedFunction:
    """Wrap a scalar function and cache its values by argument."""

    def __init__(self, func: Callable[[float], float]) -> None:
        self._func = func
        self._cache: dict[float, float] = {}

    def __call__(self, x: float) -> float:
        if x not in self._cache:
            self._cache[x] = float(self._func(x))
        return self._cache[x]

    @property
    def evaluations(self) -> int:
        return len(self._cache)


def derivative(
    func: Callable[[float], float],
    x: float,
    order: int = 1,
    cfg: DiffConfig = _DEFAULT_DIFF,
    step: float | None = None,
) -> DerivativeEstimate:
    """
    Derivative of order 1, 2 or 3 at ``x``.

    Parameters
    ----------
    func : callable
        Scalar function; wrap in :class:`MemoizedFunction` to share
        evaluations across calls.
    x : float
        Evaluation point. For ``x != 0`` the stencil stays on the side of
        ``x`` away from the origin.
    order : int, default 1
        Derivative order.
    cfg : DiffConfig
        Step policy.
    step : float, optional
        Initial step overriding ``cfg``.

    Returns
    -------
    DerivativeEstimate
        Best tableau entry, its error estimate and the initial step.

    Raises
    ------
    DomainError
        If ``order`` is not 1, 2 or 3.
    AccuracyError
        If the initial step is below ``cfg.min_step`` or the tableau yields
        no finite estimate.

    Examples
    --------
    >>> round(derivative(math.sin, 0.0).value, 10)
    1.0
    """
    if order not in _STENCILS:
        raise DomainError(f"derivative order must be 1, 2 or 3, got {order}")
    reach, weights, power = _STENCILS[order]
    h = cfg.initial_step(x, reach) if step is None else step
    if h < cfg.min_step:
        raise AccuracyError(
            f"differentiation step {h:.3e} at x={x} underflows min_step={cfg.min_step:.1e}"
        )

    def stencil(hh: float) -> float:
        return sum(w * func(x + k * hh) for k, w in weights) / hh**power

    con2 = cfg.con * cfg.con
    hh = h
    previous = [stencil(hh)]
    best = previous[0]
    err = math.inf
    for i in range(1, cfg.ntab):
        hh /= cfg.con
        current = [stencil(hh)]
        fac = con2
        for j in range(1, i + 1):
            current.append((current[j - 1] * fac - previous[j - 1]) / (fac - 1.0))
            fac *= con2
            errt = max(abs(current[j] - current[j - 1]), abs(current[j] - previous[j - 1]))
            if errt <= err:
                err = errt
                best = current[j]
        if abs(current[i] - previous[i - 1]) >= cfg.safe * err:
            break
        previous = current

    if not (math.isfinite(best) and math.isfinite(err)):
        raise AccuracyError(
            f"derivative of order {order} at x={x} did not produce a finite estimate",
            best_estimate=best,
        )
    logger.debug("order-%d derivative at %.6g: step=%.3e err=%.3e", order, x, h, err)
    return DerivativeEstimate(value=float(best), err_est=float(err), step=h)


def log_derivatives(
    func: Callable[[float], float],
    x: float,
    cfg: DiffConfig = _DEFAULT_DIFF,
    step_scale: float = 1.0,
) -> tuple[list[DerivativeEstimate], float]:
    """
    First three derivatives of ``log func`` at ``x``.

    Parameters
    ----------
    func : callable
        Positive scalar function.
    x : float
        Evaluation point.
    cfg : DiffConfig
        Step policy.
    step_scale : float, default 1
        Multiplier on the initial step; 0.5 reruns the tableau at half step.

    Returns
    -------
    tuple
        ``([g', g'', g'''], step)`` where g = log func and ``step`` is the
        initial step of the third-order tableau.
    """
    log_func = MemoizedFunction(lambda y: math.log(func(y)))
    estimates = []
    for order in (1, 2, 3):
        reach = _STENCILS[order][0]
        h = cfg.initial_step(x, reach) * step_scale
        estimates.append(derivative(log_func, x, order, cfg, step=h))
    return estimates, estimates[-1].step
