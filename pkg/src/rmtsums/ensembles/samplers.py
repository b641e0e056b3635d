"""
Seeded samplers for the Laguerre, inverse-Laguerre and Hua-Pickrell ensembles.

Every run derives one independent stream per shard from the root seed with
``numpy.random.SeedSequence.spawn`` and merges shards in index order, so the
output depends on the seed only and not on the number of worker threads.

LUE samples come from the beta = 2 bidiagonal Laguerre model: with B lower
bidiagonal, B_ii ~ chi_{2(nu+N-i+1)} and B_{i+1,i} ~ chi_{2(N-i)}, the
eigenvalues of B B^T / 2 have density proportional to
Delta(x)^2 prod x_j^nu e^{-x_j}.

Hua-Pickrell samples use the angle coordinate x = tan(theta), in which the
joint density becomes prod_{i<j} sin^2(theta_i - theta_j) prod cos^{2s}(theta_j)
on (-pi/2, pi/2)^N. For N = 1 this is exact: (1 + sin theta) / 2 is
Beta(s + 1/2, s + 1/2). For N >= 2 a component-wise random-walk Metropolis
sampler runs on the angles.
"""

import dataclasses
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from rmtsums.ensembles.config import EnsembleSpec, McmcConfig, SampleBatch
from rmtsums.ensembles.diagnostics import require_converged
from rmtsums.errors import DiagnosticsError

logger = logging.getLogger(__name__)

# Samples per shard for the exact samplers
SHARD_SIZE = 5_000

# Accepted post-burn-in Metropolis acceptance range
ACCEPTANCE_RANGE: tuple[float, float] = (0.1, 0.6)

_SCALE_BOUNDS: tuple[float, float] = (1e-4, math.pi)

ShardResult = tuple[NDArray[np.float64], float, float]


def shard_generators(seed: int, n_shards: int) -> list[np.random.Generator]:
    """
    Independent generators for ``n_shards`` shards of one run.

    Parameters
    ----------
    seed : int
        Root seed.
    n_shards : int
        Number of shards.

    Returns
    -------
    list of numpy.random.Generator
        PCG64 generators seeded from ``SeedSequence(seed).spawn(n_shards)``.
    """
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(n_shards)]


def _shard_sizes(n_samples: int) -> list[int]:
    full, rest = divmod(n_samples, SHARD_SIZE)
    return [SHARD_SIZE] * full + ([rest] if rest else [])


def _run_shards(
    spec: EnsembleSpec,
    sizes: list[int],
    draw: Callable[[np.random.Generator, int], ShardResult],
    workers: int,
) -> SampleBatch:
    rngs = shard_generators(spec.seed, len(sizes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(draw, rngs, sizes))
    else:
        results = [draw(rng, size) for rng, size in zip(rngs, sizes)]

    eigenvalues = np.concatenate([r[0] for r in results], axis=0)
    shard = np.concatenate(
        [np.full(r[0].shape[0], i, dtype=np.int64) for i, r in enumerate(results)]
    )
    acceptance = float(np.mean([r[1] for r in results]))
    scale = float(np.mean([r[2] for r in results]))
    logger.info(
        "Sampled %s param=%s N=%d: %d rows in %d shards (seed=%d)",
        spec.kind,
        spec.param,
        spec.n,
        eigenvalues.shape[0],
        len(sizes),
        spec.seed,
    )
    return SampleBatch(
        spec=spec,
        eigenvalues=eigenvalues,
        shard=shard,
        acceptance_rate=acceptance,
        proposal_scale=scale,
    )


def _lue_shard(rng: np.random.Generator, nu: float, n: int, m: int) -> NDArray[np.float64]:
    i = np.arange(n)
    diag = np.sqrt(rng.chisquare(2.0 * (nu + n - i), size=(m, n)))
    sub = np.sqrt(rng.chisquare(2.0 * (n - 1 - i[:-1]), size=(m, n - 1)))

    tri = np.zeros((m, n, n))
    tri[:, i, i] = diag**2
    tri[:, i[1:], i[1:]] += sub**2
    tri[:, i[1:], i[:-1]] = diag[:, :-1] * sub
    tri[:, i[:-1], i[1:]] = diag[:, :-1] * sub
    return 0.5 * np.linalg.eigvalsh(tri)


def sample_lue(
    nu: float, n: int, seed: int, n_samples: int, workers: int = 1
) -> SampleBatch:
    """
    Exact LUE eigenvalues for the weight x^nu e^{-x}.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    n : int
        Matrix size N.
    seed : int
        Root seed.
    n_samples : int
        Number of eigenvalue vectors, at least 100.
    workers : int, default 1
        Threads used across shards; does not change the output.

    Returns
    -------
    SampleBatch
        Rows ascending; N = 1 rows are Gamma(nu + 1, 1).
    """
    spec = EnsembleSpec(kind="lue", param=nu, n=n, seed=seed, n_samples=n_samples)

    def draw(rng: np.random.Generator, m: int) -> ShardResult:
        return _lue_shard(rng, nu, n, m), math.nan, math.nan

    return _run_shards(spec, _shard_sizes(n_samples), draw, workers)


def sample_inverse_laguerre(
    nu: float, n: int, seed: int, n_samples: int, workers: int = 1
) -> SampleBatch:
    """
    Inverse-Laguerre points y = 2/x of LUE samples.

    Parameters
    ----------
    nu : float
        Laguerre parameter, > -1.
    n : int
        Matrix size N.
    seed : int
        Root seed; the same seed gives the image of :func:`sample_lue`.
    n_samples : int
        Number of eigenvalue vectors.
    workers : int, default 1
        Threads used across shards.

    Returns
    -------
    SampleBatch
        Rows ascending and strictly positive.
    """
    spec = EnsembleSpec(kind="inverse_laguerre", param=nu, n=n, seed=seed, n_samples=n_samples)

    def draw(rng: np.random.Generator, m: int) -> ShardResult:
        return (2.0 / _lue_shard(rng, nu, n, m))[:, ::-1], math.nan, math.nan

    return _run_shards(spec, _shard_sizes(n_samples), draw, workers)


def _hua_pickrell_exact(rng: np.random.Generator, s: float, m: int) -> NDArray[np.float64]:
    w = rng.beta(s + 0.5, s + 0.5, size=m)
    return ((2.0 * w - 1.0) / (2.0 * np.sqrt(w * (1.0 - w))))[:, None]


def _component_log_density(
    theta_j: NDArray[np.float64], others: NDArray[np.float64], s: float
) -> NDArray[np.float64]:
    with np.errstate(divide="ignore"):
        repulsion = 2.0 * np.log(np.abs(np.sin(theta_j[:, None] - others))).sum(axis=1)
        return repulsion + 2.0 * s * np.log(np.cos(theta_j))


def _sweep(
    rng: np.random.Generator, theta: NDArray[np.float64], s: float, scale: float
) -> int:
    walkers, n = theta.shape
    accepted = 0
    for j in range(n):
        others = np.delete(theta, j, axis=1)
        proposal = theta[:, j] + scale * rng.standard_normal(walkers)
        inside = np.abs(proposal) < 0.5 * math.pi
        candidate = np.where(inside, proposal, 0.0)
        log_ratio = _component_log_density(candidate, others, s) - _component_log_density(
            theta[:, j], others, s
        )
        accept = inside & (np.log(rng.uniform(size=walkers)) < log_ratio)
        theta[accept, j] = proposal[accept]
        accepted += int(accept.sum())
    return accepted


def _run_chain(
    rng: np.random.Generator, s: float, n: int, draws: int, cfg: McmcConfig
) -> ShardResult:
    walkers = cfg.n_walkers
    spacing = math.pi / n
    theta = -0.5 * math.pi + spacing * (np.arange(n) + 0.5) + spacing * (
        rng.uniform(-0.4, 0.4, size=(walkers, n))
    )
    proposals_per_sweep = walkers * n
    scale = cfg.proposal_scale

    accepted = 0
    for sweep in range(1, cfg.burn_in + 1):
        accepted += _sweep(rng, theta, s, scale)
        if sweep % cfg.tune_interval == 0:
            rate = accepted / (cfg.tune_interval * proposals_per_sweep)
            scale = float(
                np.clip(scale * math.exp(2.0 * (rate - cfg.target_acceptance)), *_SCALE_BOUNDS)
            )
            accepted = 0
    logger.debug("MCMC s=%s N=%d: proposal scale frozen at %.4g", s, n, scale)

    kept = np.empty((draws, walkers, n))
    accepted = 0
    for d in range(draws):
        for _ in range(cfg.thinning):
            accepted += _sweep(rng, theta, s, scale)
        kept[d] = np.sort(theta, axis=1)
    rate = accepted / (draws * cfg.thinning * proposals_per_sweep)

    low, high = ACCEPTANCE_RANGE
    if not low <= rate <= high:
        raise DiagnosticsError(
            f"Metropolis acceptance {rate:.3f} outside [{low}, {high}] after tuning "
            f"(s={s}, N={n}, scale={scale:.4g})"
        )
    # walker-major rows: each walker's draws are contiguous
    rows = np.tan(kept.transpose(1, 0, 2).reshape(walkers * draws, n))
    return rows, rate, scale


def sample_hua_pickrell(spec: EnsembleSpec, workers: int = 1) -> SampleBatch:
    """
    Hua-Pickrell eigenvalues, density proportional to Delta(x)^2 prod (1+x_j^2)^{-s-N}.

    For N = 1 the samples are exact and split into shards. For N >= 2,
    ``spec.mcmc.n_chains`` independent chains of ``n_walkers`` walkers each
    retain ceil(n_samples / (n_chains * n_walkers)) thinned draws per walker,
    so the batch may hold slightly more than ``n_samples`` rows. Rows are
    chain-major, then walker-major.

    Parameters
    ----------
    spec : EnsembleSpec
        Must have ``kind == "hua_pickrell"``.
    workers : int, default 1
        Threads used across shards or chains.

    Returns
    -------
    SampleBatch
        Ascending rows; ``acceptance_rate``, ``proposal_scale`` and ``rhat`` set
        for MCMC.

    Raises
    ------
    ValueError
        If ``spec.kind`` is not ``"hua_pickrell"``.
    DiagnosticsError
        If a chain's acceptance rate ends outside [0.1, 0.6],
        or if the Gelman-Rubin statistic across chains is not below
        ``spec.mcmc.max_rhat``.
    """
    if spec.kind != "hua_pickrell":
        raise ValueError(f"spec.kind must be 'hua_pickrell', got {spec.kind!r}")
    s, n = spec.param, spec.n

    if n == 1:

        def exact(rng: np.random.Generator, m: int) -> ShardResult:
            return _hua_pickrell_exact(rng, s, m), math.nan, math.nan

        return _run_shards(spec, _shard_sizes(spec.n_samples), exact, workers)

    cfg = spec.mcmc
    draws = math.ceil(spec.n_samples / (cfg.n_chains * cfg.n_walkers))

    def chain(rng: np.random.Generator, m: int) -> ShardResult:
        return _run_chain(rng, s, n, m, cfg)

    batch = _run_shards(spec, [draws] * cfg.n_chains, chain, workers)
    return dataclasses.replace(batch, rhat=require_converged(batch, cfg.max_rhat))


def sample(spec: EnsembleSpec, workers: int = 1) -> SampleBatch:
    """Dispatch on ``spec.kind``."""
    if spec.kind == "hua_pickrell":
        return sample_hua_pickrell(spec, workers)
    if spec.kind == "lue":
        return sample_lue(spec.param, spec.n, spec.seed, spec.n_samples, workers)
    return sample_inverse_laguerre(spec.param, spec.n, spec.seed, spec.n_samples, workers)
