"""
Monte Carlo sampling of the matrix ensembles and empirical estimators.

Exact LUE / inverse-Laguerre sampling via the bidiagonal Laguerre model,
Hua-Pickrell sampling (exact for N = 1, Metropolis otherwise), estimators of
characteristic functions, Laplace transforms and moments, and convergence
and goodness-of-fit diagnostics.
"""

from .config import (
    MIN_SAMPLES,
    EnsembleKind,
    EnsembleSpec,
    Estimate,
    FitCheck,
    McmcConfig,
    SampleBatch,
)
from .diagnostics import (
    batch_chains,
    chain_rhat,
    effective_sample_size,
    gelman_rubin,
    ks_check,
    lue_pair_chi_square,
    lue_pair_probabilities,
    require_converged,
    walker_series,
)
from .estimators import (
    empirical_abs_moment,
    empirical_charfn,
    empirical_inverse_moment,
    empirical_laplace,
    mean_estimate,
    trace_statistic,
)
from .export import batches_to_frame, export_batches
from .samplers import (
    sample,
    sample_hua_pickrell,
    sample_inverse_laguerre,
    sample_lue,
    shard_generators,
)

__all__ = [
    "MIN_SAMPLES",
    "EnsembleKind",
    "EnsembleSpec",
    "Estimate",
    "FitCheck",
    "McmcConfig",
    "SampleBatch",
    "batch_chains",
    "chain_rhat",
    "effective_sample_size",
    "gelman_rubin",
    "ks_check",
    "lue_pair_chi_square",
    "lue_pair_probabilities",
    "require_converged",
    "walker_series",
    "empirical_abs_moment",
    "empirical_charfn",
    "empirical_inverse_moment",
    "empirical_laplace",
    "mean_estimate",
    "trace_statistic",
    "batches_to_frame",
    "export_batches",
    "sample",
    "sample_hua_pickrell",
    "sample_inverse_laguerre",
    "sample_lue",
    "shard_generators",
]
