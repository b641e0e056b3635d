"""
Configuration and result containers for series evaluation.

Defines the truncation policy shared by every infinite series in the package
and the value-with-error record returned by series evaluators.
"""

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class SeriesConfig:
    """
    Truncation policy for infinite series.

    A series stops once ``|term| < eps_rel * |partial sum|`` holds for three
    consecutive terms and at least ten terms have been summed.

    Parameters
    ----------
    eps_rel : float
        Relative term-stop threshold. Must lie in (0, 1e-3]. Default: 1e-12.
    k_max : int
        Hard cap on the number of terms. Must be at least 20. Default: 400.
    t_switch : float
        Switchover point between the small-t series and the Bessel
        determinant form of the characteristic function. Must be positive.
        Default: 1.0.

    Raises
    ------
    ValueError
        If any validation constraint is violated.

    Examples
    --------
    >>> cfg = SeriesConfig()
    >>> cfg = SeriesConfig(eps_rel=1e-14, k_max=800)
    """

    eps_rel: float = 1e-12
    k_max: int = 400
    t_switch: float = 1.0

    def __post_init__(self) -> None:
        """Validate truncation parameters."""
        if not 0.0 < self.eps_rel <= 1e-3:
            raise ValueError(f"eps_rel must be in (0, 1e-3], got {self.eps_rel}")
        if self.k_max < 20:
            raise ValueError(f"k_max must be at least 20, got {self.k_max}")
        if not self.t_switch > 0.0:
            raise ValueError(f"t_switch must be positive, got {self.t_switch}")


@dataclass(frozen=True)
class EvalResult:
    """
    Numerical value with an error estimate.

    Attributes
    ----------
    value : float or complex
        Computed value.
    err_est : float
        Nonnegative absolute error estimate.
    terms_used : int
        Number of series terms, quadrature intervals or extrapolation levels used.
    flags : tuple of str
        Warnings attached to the value (e.g. "non_monotone_convergence").
    """

    value: float | complex
    err_est: float
    terms_used: int
    flags: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Validate error estimate and term count."""
        if not (self.err_est >= 0.0 and self.err_est < float("inf")):
            raise ValueError(f"err_est must be finite and nonnegative, got {self.err_est}")
        if self.terms_used < 0:
            raise ValueError(f"terms_used must be nonnegative, got {self.terms_used}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass
class SeriesStopper:
    """
    Stateful implementation of the three-consecutive-small-terms rule.

    Parameters
    ----------
    cfg : SeriesConfig
        Truncation policy.
    """

    cfg: SeriesConfig
    _small_run: int = 0

    def update(self, k: int, term: float | complex, partial: float | complex) -> bool:
        """
        Record term ``k`` and report whether summation may stop.

        Parameters
        ----------
        k : int
            Index of the term just added (0-based).
        term : float or complex
            The term.
        partial : float or complex
            Partial sum including the term.

        Returns
        -------
        bool
            True once the stopping rule is satisfied.
        """
        if abs(term) < self.cfg.eps_rel * abs(partial) or term == 0:
            self._small_run += 1
        else:
            self._small_run = 0
        return self._small_run >= 3 and k >= 10


@dataclass(frozen=True)
class DiffConfig:
    """
    Step policy for Richardson-extrapolated central differences.

    The first column of the tableau uses central stencils at steps
    h0, h0/con, h0/con^2, ...; higher columns eliminate successive even powers
    of the step. The tableau stops early once a higher order is ``safe``
    times worse than the best estimate so far.

    Parameters
    ----------
    h0_rel : float
        Initial step relative to the evaluation point. Default: 0.1.
    h0_min : float
        Lower bound on the initial step away from the origin. Default: 1e-3.
    con : float
        Step reduction factor between tableau rows. Must exceed 1. Default: 1.4.
    ntab : int
        Maximum tableau size. Must be at least 2. Default: 10.
    safe : float
        Early-exit factor. Must exceed 1. Default: 2.0.
    min_step : float
        Smallest admissible step; smaller steps raise ``AccuracyError``.
        Default: 1e-8.
    domain_margin : float
        Largest stencil half-width as a fraction of the distance to the
        boundary t = 0. Must lie in (0, 1). Default: 0.45.

    Raises
    ------
    ValueError
        If any validation constraint is violated.
    """

    h0_rel: float = 0.1
    h0_min: float = 1e-3
    con: float = 1.4
    ntab: int = 10
    safe: float = 2.0
    min_step: float = 1e-8
    domain_margin: float = 0.45

    def __post_init__(self) -> None:
        """Validate step policy."""
        if not self.h0_rel > 0.0:
            raise ValueError(f"h0_rel must be positive, got {self.h0_rel}")
        if not self.h0_min > 0.0:
            raise ValueError(f"h0_min must be positive, got {self.h0_min}")
        if not self.con > 1.0:
            raise ValueError(f"con must exceed 1, got {self.con}")
        if self.ntab < 2:
            raise ValueError(f"ntab must be at least 2, got {self.ntab}")
        if not self.safe > 1.0:
            raise ValueError(f"safe must exceed 1, got {self.safe}")
        if not self.min_step > 0.0:
            raise ValueError(f"min_step must be positive, got {self.min_step}")
        if not 0.0 < self.domain_margin < 1.0:
            raise ValueError(f"domain_margin must be in (0, 1), got {self.domain_margin}")

    def initial_step(self, x: float, reach: int) -> float:
        """
        First step at ``x`` for a stencil extending ``reach`` steps each way.

        The stencil never crosses the origin.
        """
        h = max(self.h0_min, self.h0_rel * abs(x))
        if x != 0.0:
            h = min(h, self.domain_margin * abs(x) / reach)
        return h
