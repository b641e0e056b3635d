"""
Ensemble specifications, sampler policy and Monte Carlo result containers.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

EnsembleKind = Literal["hua_pickrell", "lue", "inverse_laguerre"]

# Largest N accepted by the Hua-Pickrell sampler
MAX_HUA_PICKRELL_N = 32

MIN_SAMPLES = 100


@dataclass(frozen=True)
class McmcConfig:
    """
    Random-walk Metropolis policy for the Hua-Pickrell sampler.

    Parameters
    ----------
    proposal_scale : float
        Initial Gaussian proposal standard deviation in the angle coordinate.
        Must be positive. Default: 0.5.
    burn_in : int
        Sweeps discarded while the proposal scale is tuned. Must be
        nonnegative. Default: 500.
    thinning : int
        Sweeps between retained draws. Must be positive. Default: 5.
    n_chains : int
        Independent chains (one RNG stream each). Must be at least 2 for the
        Gelman-Rubin statistic. Default: 4.
    n_walkers : int
        Walkers advanced in lockstep within a chain. Must be positive.
        Default: 250.
    target_acceptance : float
        Acceptance rate the burn-in tuning aims for. Default: 0.3.
    tune_interval : int
        Sweeps between scale adjustments during burn-in. Default: 50.
    max_rhat : float
        Gelman-Rubin statistic across chains at or above which the run is
        rejected. Must exceed 1. Default: 1.05.

    Raises
    ------
    ValueError
        If any validation constraint is violated.
    """

    proposal_scale: float = 0.5
    burn_in: int = 500
    thinning: int = 5
    n_chains: int = 4
    n_walkers: int = 250
    target_acceptance: float = 0.3
    tune_interval: int = 50
    max_rhat: float = 1.05

    def __post_init__(self) -> None:
        """Validate sampler policy."""
        if not self.proposal_scale > 0.0:
            raise ValueError(f"proposal_scale must be positive, got {self.proposal_scale}")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be nonnegative, got {self.burn_in}")
        if self.thinning < 1:
            raise ValueError(f"thinning must be positive, got {self.thinning}")
        if self.n_chains < 2:
            raise ValueError(f"n_chains must be at least 2, got {self.n_chains}")
        if self.n_walkers < 1:
            raise ValueError(f"n_walkers must be positive, got {self.n_walkers}")
        if not 0.0 < self.target_acceptance < 1.0:
            raise ValueError(
                f"target_acceptance must lie in (0, 1), got {self.target_acceptance}"
            )
        if self.tune_interval < 1:
            raise ValueError(f"tune_interval must be positive, got {self.tune_interval}")
        if not self.max_rhat > 1.0:
            raise ValueError(f"max_rhat must exceed 1, got {self.max_rhat}")


@dataclass(frozen=True)
class EnsembleSpec:
    """
    One Monte Carlo run: ensemble, parameter, size, seed and sample count.

    Parameters
    ----------
    kind : EnsembleKind
        ``"hua_pickrell"`` (param s), ``"lue"`` or ``"inverse_laguerre"``
        (param nu).
    param : float
        s > -1/2 for Hua-Pickrell; nu > -1 otherwise.
    n : int
        Matrix size N. Must be positive; at most 32 for Hua-Pickrell.
    seed : int
        Root seed in [0, 2^64).
    n_samples : int
        Number of eigenvalue vectors. Must be at least 100.
    mcmc : McmcConfig
        Sampler policy; used by Hua-Pickrell with N >= 2 only.

    Raises
    ------
    ValueError
        If any validation constraint is violated.
    """

    kind: EnsembleKind
    param: float
    n: int
    seed: int = 0
    n_samples: int = 10_000
    mcmc: McmcConfig = field(default_factory=McmcConfig)

    def __post_init__(self) -> None:
        """Validate ensemble parameters."""
        if self.kind not in ("hua_pickrell", "lue", "inverse_laguerre"):
            raise ValueError(f"kind must be a known ensemble, got {self.kind!r}")
        if self.kind == "hua_pickrell":
            if not self.param > -0.5:
                raise ValueError(f"s must exceed -1/2, got {self.param}")
            if self.n > MAX_HUA_PICKRELL_N:
                raise ValueError(
                    f"n must be at most {MAX_HUA_PICKRELL_N} for hua_pickrell, got {self.n}"
                )
        elif not self.param > -1.0:
            raise ValueError(f"nu must exceed -1, got {self.param}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must lie in [0, 2^64), got {self.seed}")
        if self.n_samples < MIN_SAMPLES:
            raise ValueError(f"n_samples must be at least {MIN_SAMPLES}, got {self.n_samples}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """
    Eigenvalue samples of one ensemble run.

    Attributes
    ----------
    spec : EnsembleSpec
        The run that produced the samples.
    eigenvalues : ndarray, shape (n_samples, N)
        One row per sample, ascending within a row. Inverse-Laguerre rows hold
        y = 2/x.
    shard : ndarray of int, shape (n_samples,)
        Shard (or chain) index of each row, in merge order.
    acceptance_rate : float
        Post-burn-in Metropolis acceptance; NaN for exact samplers.
    proposal_scale : float
        Frozen proposal scale (mean over chains); NaN for exact samplers.
    rhat : float
        Gelman-Rubin statistic across chains; NaN for exact samplers.
    """

    spec: EnsembleSpec
    eigenvalues: NDArray[np.float64]
    shard: NDArray[np.int64]
    acceptance_rate: float = math.nan
    proposal_scale: float = math.nan
    rhat: float = math.nan

    def __post_init__(self) -> None:
        """Validate array shapes."""
        if self.eigenvalues.ndim != 2 or self.eigenvalues.shape[1] != self.spec.n:
            raise ValueError(
                f"eigenvalues must have shape (n_samples, {self.spec.n}), "
                f"got {self.eigenvalues.shape}"
            )
        if self.shard.shape != (self.eigenvalues.shape[0],):
            raise ValueError("shard index must have one entry per sample")

    def __len__(self) -> int:
        return int(self.eigenvalues.shape[0])

    @property
    def is_mcmc(self) -> bool:
        """True when the rows are correlated Metropolis draws."""
        return not math.isnan(self.acceptance_rate)


@dataclass(frozen=True)
class Estimate:
    """
    Sample-mean estimate with its standard error.

    Attributes
    ----------
    value : float
        Sample mean.
    stderr : float
        Standard error; uses the effective sample size for MCMC batches.
    n : int
        Number of samples averaged.
    diagnostic : float
        Secondary statistic that should vanish (the sine mean for
        characteristic-function estimates); NaN where not applicable.
    """

    value: float
    stderr: float
    n: int
    diagnostic: float = math.nan

    def __post_init__(self) -> None:
        """Validate standard error and count."""
        if not self.stderr >= 0.0:
            raise ValueError(f"stderr must be nonnegative, got {self.stderr}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")

    def within(self, expected: float, sigmas: float = 3.0) -> bool:
        """True if ``expected`` lies within ``sigmas`` standard errors."""
        return abs(self.value - expected) <= sigmas * self.stderr

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class FitCheck:
    """
    Goodness-of-fit test outcome.

    Attributes
    ----------
    statistic : float
        KS distance or chi-square statistic.
    p_value : float
        Test p-value.
    passed : bool
        ``p_value`` exceeds the significance level.
    """

    statistic: float
    p_value: float
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)
