"""
Measuring functions for the acceptance check catalog.

Each function takes no arguments and returns a :class:`Measurement` whose
``error`` the runner compares against the catalog tolerance. Functions that
sweep a parameter set report the worst case.
"""

import logging
import math
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable

from scipy import stats

from rmtsums.bessel.config import BesselParams
from rmtsums.bessel.inverse_gamma import uniform_moment_bound
from rmtsums.bessel.laplace import psi_N
from rmtsums.charfn.finite import phi_finite_N, phi_finite_N_laguerre
from rmtsums.distribution.coefficients import coeff_a, coeff_a_brute_force
from rmtsums.distribution.density import rho, rho_series
from rmtsums.distribution.moments import (
    moment_R,
    moment_R_halfint,
    moment_R_halfint_closed,
    moment_R_integer,
    moment_R_quarter,
    series_vanishing_check,
)
from rmtsums.ensembles.config import EnsembleSpec, SampleBatch
from rmtsums.ensembles.diagnostics import ks_check, lue_pair_chi_square
from rmtsums.ensembles.estimators import (
    empirical_charfn,
    empirical_inverse_moment,
    empirical_laplace,
)
from rmtsums.ensembles.samplers import sample_hua_pickrell, sample_inverse_laguerre, sample_lue
from rmtsums.oracles.config import QuadConfig
from rmtsums.oracles.identities import (
    aomoto,
    aomoto_by_quadrature,
    selberg_by_quadrature,
    selberg_norm,
    winn_identity_check_N1,
)
from rmtsums.oracles.inversion import density_by_inversion
from rmtsums.oracles.quadrature import adaptive_quad
from rmtsums.painleve.boundary import boundary_report
from rmtsums.painleve.config import BoundaryReport
from rmtsums.painleve.residuals import residual_bessel_inf, residual_report
from rmtsums.verification.config import Measurement

logger = logging.getLogger(__name__)

_TIGHT = QuadConfig(abs_tol=1e-13, rel_tol=1e-12, max_subdivisions=2000)

# Sample size and seed of the Monte Carlo closure checks
MC_SAMPLES = 100_000
MC_SEED = 20_240_601

_FEW_POINTS = (0.5, 1.0, 2.0, 4.0)

CheckFunction = Callable[[], Measurement]


def _rel(value: float, expected: float) -> float:
    return abs(value - expected) / abs(expected)


def _neg_log10(p_value: float) -> float:
    return -math.log10(max(p_value, 1e-300))


def _worst(cases: Iterable[tuple[str, float, float, float]]) -> Measurement:
    """Largest error over (label, value, expected, error) cases."""
    label, value, expected, error = max(cases, key=lambda case: case[3])
    return Measurement(value=value, expected=expected, error=error, detail=label)


def _relative_cases(
    pairs: Iterable[tuple[str, float, float]],
) -> Iterable[tuple[str, float, float, float]]:
    return ((label, v, e, _rel(v, e)) for label, v, e in pairs)


def _absolute_cases(
    pairs: Iterable[tuple[str, float, float]],
) -> Iterable[tuple[str, float, float, float]]:
    return ((label, v, e, abs(v - e)) for label, v, e in pairs)


# golden -------------------------------------------------------------------


def golden_r_1_1() -> Measurement:
    value = float(moment_R(1, 1.0).value)
    return Measurement(value, 1.0 / 12.0, _rel(value, 1.0 / 12.0))


def golden_r_2_1() -> Measurement:
    value = float(moment_R(2, 1.0).value)
    return Measurement(value, 1.0 / 720.0, _rel(value, 1.0 / 720.0))


def golden_r_2_2() -> Measurement:
    value = float(moment_R(2, 2.0).value)
    return Measurement(value, 1.0 / 6720.0, _rel(value, 1.0 / 6720.0))


def golden_integer_taylor() -> Measurement:
    """Exact Taylor-coefficient route against the hypergeometric routes."""
    pairs = (
        (f"s={s},h={h}", float(moment_R_integer(s, h).value), float(moment_R(s, float(h)).value))
        for s, h in ((1, 1), (2, 1), (2, 2), (3, 1), (3, 2))
    )
    return _worst(_relative_cases(pairs))


# halfint / quarter --------------------------------------------------------


def halfint_r_1_half() -> Measurement:
    value = float(moment_R_halfint(1, 0).value)
    expected = (math.e**2 - 5.0) / (4.0 * math.pi)
    return Measurement(value, expected, _rel(value, expected))


def halfint_r_2_half() -> Measurement:
    value = float(moment_R_halfint(2, 0).value)
    expected = moment_R_halfint_closed(2, 0)
    return Measurement(value, expected, _rel(value, expected))


def halfint_r_2_three_halves() -> Measurement:
    value = float(moment_R_halfint(2, 1).value)
    expected = moment_R_halfint_closed(2, 1)
    return Measurement(value, expected, _rel(value, expected))


def quarter_r_1() -> Measurement:
    pairs = (
        (f"h={h}", float(moment_R(1, h).value), moment_R_quarter(h))
        for h in (-0.25, 0.25, 0.75, 1.25)
    )
    return _worst(_relative_cases(pairs))


# s = 0 ----------------------------------------------------------------------


def s0_finite_n_exact() -> Measurement:
    pairs = (
        (f"N={n},t={t}", phi_finite_N(0.0, n, t).value, math.exp(-0.5 * t))
        for n, t in product((1, 2, 4, 8), (0.5, 1.0, 5.0))
    )
    return _worst(_absolute_cases(pairs))


def s0_moment_closed() -> Measurement:
    value = float(moment_R(0, 0.25).value)
    expected = 2.0**-0.5 / math.cos(0.25 * math.pi)
    return Measurement(value, expected, _rel(value, expected))


def s0_cauchy_ks() -> Measurement:
    spec = EnsembleSpec(kind="hua_pickrell", param=0.0, n=1, seed=MC_SEED, n_samples=MC_SAMPLES)
    check = ks_check(sample_hua_pickrell(spec).eigenvalues[:, 0], stats.cauchy.cdf)
    return Measurement(check.p_value, math.nan, _neg_log10(check.p_value), "KS vs Cauchy")


# painleve -------------------------------------------------------------------


def _report_cases(
    equation: str, param_sets: Iterable[dict], grid: tuple[float, ...] | None = None
) -> Iterable[tuple[str, float, float, float]]:
    for params in param_sets:
        report = residual_report(equation, params, grid=grid)  # type: ignore[arg-type]
        yield str(params), report.max_abs, 0.0, report.max_abs


def painleve_sigma_p3() -> Measurement:
    return _worst(_report_cases("sigma_p3_inf", ({"s": s} for s in (1, 2, 3))))


def painleve_p5_finite() -> Measurement:
    sets = ({"s": s, "n": n} for s, n in product((0.5, 1.0, 2.0), (4, 8)))
    return _worst(_report_cases("p5_finite_N", sets, _FEW_POINTS))


def painleve_hankel() -> Measurement:
    triples = ((2, 0.5, 0.7), (3, -0.4, 1.3), (4, 1.0, 2.5))
    sets = ({"n": n, "alpha": a, "lam": lam} for n, a, lam in triples)
    return _worst(_report_cases("hankel_sigma", sets, _FEW_POINTS))


def painleve_bessel_finite() -> Measurement:
    sets = ({"nu": nu, "n": n} for nu, n in product((0.5, 1.5, 2.0), (2, 4, 8)))
    return _worst(_report_cases("bessel_finite_N", sets, (0.25, 1.0, 4.0)))


def painleve_bessel_limit() -> Measurement:
    residual = residual_bessel_inf(2.0, 0.5)
    return Measurement(residual.normalized, 0.0, abs(residual.normalized), "nu=2,t=0.5")


def painleve_bessel_limit_decreasing() -> Measurement:
    """Ratio |res(N=16)| / |res(N=4)| of the raw h_N residual; below 1 passes."""
    small = residual_bessel_inf(1.5, 1.0, (4,)).normalized
    large = residual_bessel_inf(1.5, 1.0, (16,)).normalized
    ratio = abs(large) / abs(small) if small != 0.0 else math.inf
    return Measurement(large, 0.0, ratio, f"N=4: {small:.3e}, N=16: {large:.3e}")


# boundary -------------------------------------------------------------------


def _boundary_measurement(report: BoundaryReport) -> Measurement:
    worst = max(report.checks, key=lambda c: abs(c.estimate - c.expected) / c.tolerance)
    error = abs(worst.estimate - worst.expected) / worst.tolerance
    return Measurement(worst.estimate, worst.expected, error, worst.name)


def boundary_tau_s1() -> Measurement:
    return _boundary_measurement(boundary_report("tau", 1))


def boundary_tau_s2() -> Measurement:
    return _boundary_measurement(boundary_report("tau", 2))


def boundary_h_nu2() -> Measurement:
    return _boundary_measurement(boundary_report("h", 2.0))


# identities -----------------------------------------------------------------


def identity_winn_n1() -> Measurement:
    cases = []
    for s, t in product((0.0, 0.5, 1.0, 2.0, 3.0), (0.5, 1.0, 3.0)):
        check = winn_identity_check_N1(s, t, _TIGHT)
        cases.append((f"s={s},t={t}", check.lhs.real, check.rhs, check.rel_gap))
    return _worst(cases)


def identity_selberg() -> Measurement:
    pairs = (
        (f"N={n},s={s}", selberg_by_quadrature(n, s, _TIGHT), selberg_norm(n, s))
        for n, s in product((1, 2), (0.0, 1.0, 1.5))
    )
    return _worst(_relative_cases(pairs))


def identity_aomoto() -> Measurement:
    pairs = (
        (f"N={n},k={k},alpha={a}", aomoto_by_quadrature(n, k, a, _TIGHT), aomoto(n, k, a))
        for n in (1, 2)
        for k in range(n + 1)
        for a in (1.0, 2.5)
    )
    return _worst(_relative_cases(pairs))


def identity_phi_routes() -> Measurement:
    pairs = (
        (
            f"s={s},N={n},t={t}",
            phi_finite_N(float(s), n, t).value,
            phi_finite_N_laguerre(s, n, t).value,
        )
        for s, n, t in product((1, 2), (2, 4), (0.5, 2.0))
    )
    return _worst(_absolute_cases(pairs))


# density --------------------------------------------------------------------


def density_normalization() -> Measurement:
    cases = []
    for s in (1, 2, 3):
        half = adaptive_quad(lambda x, s=s: rho(s, x).rho, 0.0, math.inf, _TIGHT).value
        cases.append((f"s={s}", 2.0 * half, 1.0, abs(2.0 * half - 1.0)))
    return _worst(cases)


def density_vs_inversion() -> Measurement:
    pairs = (
        (f"s={s},x={x}", rho(s, x).rho, density_by_inversion(s, x, _TIGHT))
        for s, x in product((1, 2, 3), (0.0, 0.5, 2.0))
    )
    return _worst(_absolute_cases(pairs))


def density_s2_series_vs_hyp() -> Measurement:
    pairs = ((f"x={x}", rho_series(2, x).rho, rho(2, x).rho) for x in (0.0, 0.7, 2.5))
    return _worst(_absolute_cases(pairs))


# vanishing / coefficients ---------------------------------------------------


def vanishing_halfint_series() -> Measurement:
    cases = (
        (f"s={s},m={m}", series_vanishing_check(s, m), 0.0, abs(series_vanishing_check(s, m)))
        for s in (1, 2, 3)
        for m in range(s)
    )
    return _worst(cases)


def coefficients_brute_force() -> Measurement:
    cases = []
    for s, k in product((2, 3, 5), range(5)):
        exact, brute = coeff_a(s, k), coeff_a_brute_force(s, k)
        cases.append((f"s={s},k={k}", float(exact), float(brute), float(abs(exact - brute))))
    return _worst(cases)


# montecarlo -----------------------------------------------------------------


@lru_cache(maxsize=1)
def _hua_pickrell_batch() -> SampleBatch:
    spec = EnsembleSpec(kind="hua_pickrell", param=1.0, n=8, seed=MC_SEED, n_samples=MC_SAMPLES)
    return sample_hua_pickrell(spec)


@lru_cache(maxsize=1)
def _inverse_laguerre_batch() -> SampleBatch:
    return sample_inverse_laguerre(1.5, 8, seed=MC_SEED, n_samples=MC_SAMPLES)


def _sigmas(value: float, expected: float, stderr: float) -> float:
    return abs(value - expected) / stderr if stderr > 0.0 else math.inf


def montecarlo_hua_pickrell_charfn() -> Measurement:
    estimate = empirical_charfn(_hua_pickrell_batch(), 1.0)
    expected = phi_finite_N(1.0, 8, 1.0).value
    return Measurement(
        estimate.value,
        expected,
        _sigmas(estimate.value, expected, estimate.stderr),
        f"stderr={estimate.stderr:.3e}",
    )


def montecarlo_hua_pickrell_rhat() -> Measurement:
    batch = _hua_pickrell_batch()
    return Measurement(batch.rhat, 1.0, batch.rhat, f"{int(batch.shard.max()) + 1} chains")


def montecarlo_inverse_laguerre_laplace() -> Measurement:
    batch = _inverse_laguerre_batch()
    cases = []
    for t in (0.5, 1.0, 2.0):
        estimate = empirical_laplace(batch, t)
        expected = psi_N(BesselParams(nu=1.5, n=8, t=t)).value
        cases.append(
            (f"t={t}", estimate.value, expected, _sigmas(estimate.value, expected, estimate.stderr))
        )
    return _worst(cases)


def montecarlo_inverse_laguerre_mean() -> Measurement:
    """Sample mean of sum_j y_j / N against 2/nu."""
    estimate = empirical_inverse_moment(_inverse_laguerre_batch(), 1)
    value, stderr = 2.0 * estimate.value, 2.0 * estimate.stderr
    return Measurement(value, 2.0 / 1.5, _sigmas(value, 2.0 / 1.5, stderr))


def montecarlo_uniform_moment_bound() -> Measurement:
    """(estimate - 3 stderr) / bound for the k = 2 inverse moment; at most 1 passes."""
    estimate = empirical_inverse_moment(_inverse_laguerre_batch(), 2)
    bound = uniform_moment_bound(1.5, 2)
    return Measurement(estimate.value, bound, (estimate.value - 3.0 * estimate.stderr) / bound)


def montecarlo_lue_pair_density() -> Measurement:
    check = lue_pair_chi_square(sample_lue(1.5, 2, seed=MC_SEED, n_samples=MC_SAMPLES))
    return Measurement(check.p_value, math.nan, _neg_log10(check.p_value), "chi-square")
