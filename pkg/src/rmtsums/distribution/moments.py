"""
Complex moments R(s, h) of X(s) and the absolute moments E|X(s)|^{2h}.

Conventions
-----------
For integer s >= 0 and Re h in (-1/2, s + 1/2),

    E|X(s)|^{2h} = 2^{2h} G(2s+1) / G(s+1)^2 * R(s, h),

    R(s, h) = G(s+1)^2 / G(2s+1) * 2^{-2h} / cos(pi h) * S(s, h),
    S(s, h) = sum_k c_k(s) (-2h)_k 2^k,

with c_k = V^(s) b_k(s) the normalized composition coefficients, so that
R(s, 0) = G(s+1)^2 / G(2s+1) and E|X(s)|^0 = 1. For s = 1 and s = 2 the
series S collapses to 1F1(-2h; 2; 2) and 2F2(5/2, -2h; 5, 4; 8) / 12 times
G(2s+1)/G(s+1)^2.

At h = m + 1/2 both S and cos(pi h) vanish; the limit is taken by
L'Hopital's rule with the term-wise derivative of S.
"""

import cmath
import logging
import math
from fractions import Fraction

from rmtsums.charfn.series import normalized_coefficient, prefactor_v
from rmtsums.distribution.config import HALFINT_REROUTE, MomentResult
from rmtsums.errors import (
    AccuracyError,
    ConsistencyError,
    DomainError,
    IndeterminateFormError,
)
from rmtsums.specfun.bessel import bessel_i
from rmtsums.specfun.config import SeriesConfig, SeriesStopper
from rmtsums.specfun.hypergeometric import hyp_pfq

logger = logging.getLogger(__name__)

_DEFAULT_SERIES = SeriesConfig()

_EPS = 2.220446049250313e-16


def _check_s(s: int) -> int:
    if s < 0 or int(s) != s:
        raise DomainError(f"s must be a nonnegative integer, got {s}")
    return int(s)


def _check_strip(s: int, h: complex) -> None:
    if not -0.5 < h.real < s + 0.5:
        raise DomainError(f"Re h must lie in (-1/2, {s + 0.5}), got {h}")


def _g_ratio(s: int) -> float:
    """G(s+1)^2 / G(2s+1) = 1 / |V^(s)|."""
    return float(1 / abs(prefactor_v(s)))


def _coefficient(s: int, k: int) -> Fraction:
    if s == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    return normalized_coefficient(s, k)


def _as_output(value: complex, h: complex) -> float | complex:
    return value.real if h.imag == 0.0 else value


def moment_R(
    s: int,
    h: float | complex,
    cfg: SeriesConfig = _DEFAULT_SERIES,
    reroute: bool = True,
) -> MomentResult:
    """
    Complex moment R(s, h).

    Parameters
    ----------
    s : int
        Nonnegative integer.
    h : float or complex
        Exponent with Re h in (-1/2, s + 1/2).
    cfg : SeriesConfig
        Truncation policy for the series routes.
    reroute : bool, default True
        Send real h within 1e-6 of a half-integer to :func:`moment_R_halfint`.

    Returns
    -------
    MomentResult
        Methods ``"closed_s0"``, ``"hyp_s1"``, ``"hyp_s2"``,
        ``"general_series"`` or ``"lhopital"``. The value is a float for
        real h and complex otherwise.

    Raises
    ------
    DomainError
        If ``s`` is not a nonnegative integer or ``h`` is outside the strip.
    IndeterminateFormError
        If ``h`` is a half-integer (to within 1e-6) and ``reroute`` is False.
    AccuracyError
        If a series fails to converge.

    Examples
    --------
    >>> round(moment_R(1, 1.0).value * 12, 12)
    1.0
    >>> round(moment_R(0, 0.25).value, 12)
    1.0
    """
    s = _check_s(s)
    hc = complex(h)
    _check_strip(s, hc)

    if hc.imag == 0.0:
        m = round(hc.real - 0.5)
        if m >= 0 and abs(hc.real - (m + 0.5)) < HALFINT_REROUTE:
            if not reroute:
                raise IndeterminateFormError(
                    f"R({s}, h) at h={hc.real} is a 0/0 form; use moment_R_halfint(s, {m})"
                )
            logger.debug("moment_R s=%d h=%s rerouted to half-integer m=%d", s, hc.real, m)
            return moment_R_halfint(s, m, cfg)

    scale = cmath.exp(-2.0 * hc * math.log(2.0)) / cmath.cos(math.pi * hc)
    hyp_arg: float | complex = hc.real if hc.imag == 0.0 else hc
    if s == 0:
        value = scale
        return MomentResult(
            s=s, h=h, value=_as_output(value, hc), method="closed_s0", err_est=4 * _EPS * abs(value)
        )
    if s == 1:
        hyp = hyp_pfq([-2.0 * hyp_arg], [2.0], 2.0, cfg)
        value = scale * complex(hyp.value)
        err = abs(scale) * hyp.err_est + 8 * _EPS * abs(value)
        return MomentResult(s=s, h=h, value=_as_output(value, hc), method="hyp_s1", err_est=err)
    if s == 2:
        hyp = hyp_pfq([2.5, -2.0 * hyp_arg], [5.0, 4.0], 8.0, cfg)
        value = scale * complex(hyp.value) / 12.0
        err = abs(scale) * hyp.err_est / 12.0 + 8 * _EPS * abs(value)
        return MomentResult(s=s, h=h, value=_as_output(value, hc), method="hyp_s2", err_est=err)
    return moment_R_series(s, h, cfg)


def moment_R_series(
    s: int, h: float | complex, cfg: SeriesConfig = _DEFAULT_SERIES
) -> MomentResult:
    """
    R(s, h) from the general composition series, any s >= 0.

    Integer h terminates the series, which is then summed exactly. Half-integer
    h is not rerouted here.

    Raises
    ------
    DomainError
        If ``h`` is outside the strip.
    AccuracyError
        If the series has not settled after ``cfg.k_max`` terms.
    """
    s = _check_s(s)
    hc = complex(h)
    _check_strip(s, hc)
    scale = _g_ratio(s) * cmath.exp(-2.0 * hc * math.log(2.0)) / cmath.cos(math.pi * hc)

    if hc.imag == 0.0 and hc.real.is_integer():
        n = int(hc.real)
        total = Fraction(0)
        poch = Fraction(1)
        for k in range(2 * n + 1):
            total += _coefficient(s, k) * poch * 2**k
            poch *= -2 * n + k
        value = scale * float(total)
        return MomentResult(
            s=s, h=h, value=value.real, method="general_series", err_est=8 * _EPS * abs(value)
        )

    a = -2.0 * hc
    poch_c = complex(1.0)
    total_c = complex(0.0)
    term = complex(0.0)
    prev = 0.0
    magnitude = 0.0
    stopper = SeriesStopper(cfg)
    for k in range(cfg.k_max):
        term = float(_coefficient(s, k) * 2**k) * poch_c
        total_c += term
        magnitude += abs(term)
        if stopper.update(k, term, total_c):
            ratio = abs(term) / prev if prev > 0.0 else 0.0
            tail = abs(term) * ratio / (1.0 - ratio) if ratio < 0.9 else 10.0 * abs(term)
            value = scale * total_c
            err = abs(scale) * (tail + 4.0 * k * _EPS * magnitude)
            logger.debug("moment_R_series s=%d h=%s: %d terms", s, h, k + 1)
            return MomentResult(
                s=s, h=h, value=_as_output(value, hc), method="general_series", err_est=err
            )
        prev = abs(term)
        poch_c *= a + k

    raise AccuracyError(
        f"moment series for s={s}, h={h} did not converge in {cfg.k_max} terms",
        best_estimate=scale * total_c,
        err_est=abs(scale * term),
    )


def _neg2h_derivatives(m: int, count: int) -> list[int]:
    """d/dh (-2h)_k at h = m + 1/2 for k < count, exactly."""
    out = []
    prod = 1  # prod_{i<k} (i - 2m - 1)
    partial = 0  # sum_j prod_{i<k, i != j} (i - 2m - 1)
    for k in range(count):
        out.append(-2 * partial)
        f = k - 2 * m - 1
        partial = partial * f + prod
        prod *= f
    return out


def moment_R_halfint(s: int, m: int, cfg: SeriesConfig = _DEFAULT_SERIES) -> MomentResult:
    """
    R(s, m + 1/2) as the limit of the removable 0/0 form.

    With S(h) the bracketed series, S(m + 1/2) = 0 and

        R(s, m + 1/2) = G(s+1)^2/G(2s+1) * 2^{-2m-1} S'(m + 1/2) / (-pi sin(pi (m + 1/2))),

    where S' is summed term by term from the exact derivatives of (-2h)_k.

    Parameters
    ----------
    s : int
        Positive integer.
    m : int
        Nonnegative integer with m < s.
    cfg : SeriesConfig
        Truncation policy.

    Returns
    -------
    MomentResult
        Method ``"lhopital"``.

    Examples
    --------
    >>> abs(moment_R_halfint(1, 0).value - (math.e**2 - 5) / (4 * math.pi)) < 1e-12
    True
    """
    s = _check_s(s)
    if s < 1:
        raise DomainError(f"half-integer moments require s >= 1, got {s}")
    if not 0 <= m < s:
        raise DomainError(f"m must satisfy 0 <= m < s={s}, got {m}")

    h = m + 0.5
    derivs = _neg2h_derivatives(m, cfg.k_max)
    total = 0.0
    term = 0.0
    prev = 0.0
    magnitude = 0.0
    stopper = SeriesStopper(cfg)
    for k in range(cfg.k_max):
        term = float(_coefficient(s, k) * 2**k * derivs[k])
        total += term
        magnitude += abs(term)
        if k > 2 * m + 1 and stopper.update(k, term, total):
            break
        prev = abs(term)
    else:
        raise AccuracyError(
            f"half-integer moment series for s={s}, m={m} did not converge in {cfg.k_max} terms",
            best_estimate=total,
            err_est=abs(term),
        )

    ratio = abs(term) / prev if prev > 0.0 else 0.0
    tail = abs(term) * ratio / (1.0 - ratio) if ratio < 0.9 else 10.0 * abs(term)
    sin_value = -1.0 if m % 2 else 1.0
    scale = _g_ratio(s) * 2.0 ** (-2.0 * h) / (-math.pi * sin_value)
    value = scale * total
    err = abs(scale) * (tail + 4.0 * k * _EPS * magnitude)
    logger.debug("moment_R_halfint s=%d m=%d: %.15g", s, m, value)
    return MomentResult(s=s, h=h, value=value, method="lhopital", err_est=err)


def series_vanishing_check(s: int, m: int) -> float:
    """
    The bracketed series S(s, m + 1/2), summed exactly.

    (-2h)_k vanishes for k > 2m + 1 at h = m + 1/2, so the sum is finite. The
    returned value is zero whenever R(s, m + 1/2) is finite.

    Examples
    --------
    >>> series_vanishing_check(1, 0)
    0.0
    """
    s = _check_s(s)
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    if not 0 <= m < s:
        raise DomainError(f"m + 1/2 must lie in (0, {s + 0.5}), got m={m}")
    total = Fraction(0)
    poch = Fraction(1)
    for k in range(2 * m + 2):
        total += _coefficient(s, k) * poch * 2**k
        poch *= -2 * m - 1 + k
    return float(total)


def taylor_coefficients(s: int, count: int) -> list[Fraction]:
    """
    Exact coefficients e_n of phi^(s)(t) = sum_n e_n |t|^n for t >= 0.

    The Cauchy product of e^{-t/2} with the composition series.
    """
    s = _check_s(s)
    damping = [Fraction((-1) ** j, 2**j * math.factorial(j)) for j in range(count)]
    return [
        sum((damping[j] * _coefficient(s, n - j) for j in range(n + 1)), Fraction(0))
        for n in range(count)
    ]


def moment_R_integer(s: int, h: int) -> MomentResult:
    """
    R(s, h) for integer h from the derivatives of phi^(s) at the origin.

    R(s, h) = (-1)^h G(s+1)^2/G(2s+1) (2h)! e_{2h}, exact in rational
    arithmetic. phi^(s) is 2s times differentiable at 0 because the odd
    Taylor coefficients below 2s + 1 vanish; this is checked.

    Raises
    ------
    DomainError
        If ``h`` is not an integer in [0, s].
    ConsistencyError
        If an odd coefficient below 2h is nonzero.

    Examples
    --------
    >>> round(moment_R_integer(2, 2).value * 6720, 12)
    1.0
    """
    s = _check_s(s)
    if int(h) != h or not 0 <= h <= s:
        raise DomainError(f"h must be an integer in [0, {s}], got {h}")
    h = int(h)
    coeffs = taylor_coefficients(s, 2 * h + 1)
    for n in range(1, 2 * h, 2):
        if coeffs[n] != 0:
            raise ConsistencyError(f"odd Taylor coefficient e_{n} of phi^({s}) is {coeffs[n]}")
    exact = (-1) ** h * math.factorial(2 * h) * coeffs[2 * h] / abs(prefactor_v(s))
    value = float(exact)
    return MomentResult(
        s=s, h=float(h), value=value, method="integer_taylor", err_est=_EPS * abs(value)
    )


def moment_R_quarter(h: float) -> float:
    """
    Closed forms of R(1, h) at quarter-integer h via I_0(1) and I_1(1).

    Raises
    ------
    DomainError
        If ``h`` is not one of -1/4, 1/4, 3/4, 5/4.
    """
    i0 = bessel_i(0, 1.0)
    i1 = bessel_i(1, 1.0)
    e = math.e
    forms = {
        -0.25: 2.0 * e * (i0 - i1),
        0.25: e / 3.0 * (-i0 + 3.0 * i1),
        0.75: e / 30.0 * (5.0 * i0 - 9.0 * i1),
        1.25: e / 140.0 * (5.0 * i0 - 3.0 * i1),
    }
    if h not in forms:
        raise DomainError(f"closed form known for h in {sorted(forms)}, got {h}")
    return forms[h]


def moment_R_halfint_closed(s: int, m: int, cfg: SeriesConfig = _DEFAULT_SERIES) -> float:
    """
    Closed forms of R(s, m + 1/2) for (s, m) in {(1, 0), (2, 0), (2, 1)}.

    Raises
    ------
    DomainError
        For any other pair.
    """
    if (s, m) == (1, 0):
        return (math.e**2 - 5.0) / (4.0 * math.pi)
    if (s, m) == (2, 0):
        f33 = float(hyp_pfq([4.5, 1.0, 1.0], [3.0, 6.0, 7.0], 8.0, cfg).value.real)
        return 7.0 / (180.0 * math.pi) * (15.0 / 7.0 - f33)
    if (s, m) == (2, 1):
        f33 = float(hyp_pfq([6.5, 1.0, 1.0], [5.0, 8.0, 9.0], 8.0, cfg).value.real)
        return 11.0 / (3360.0 * math.pi) * (-28.0 / 33.0 + f33)
    raise DomainError(f"no closed form for (s, m) = ({s}, {m})")


def abs_moment(s: int, h: float | complex, cfg: SeriesConfig = _DEFAULT_SERIES) -> MomentResult:
    """
    E|X(s)|^{2h} = 2^{2h} G(2s+1) / G(s+1)^2 * R(s, h).

    Examples
    --------
    >>> round(abs_moment(3, 0.0).value, 12)
    1.0
    """
    r = moment_R(s, h, cfg)
    hc = complex(h)
    factor = cmath.exp(2.0 * hc * math.log(2.0)) / _g_ratio(r.s)
    value = factor * complex(r.value)
    return MomentResult(
        s=r.s,
        h=h,
        value=_as_output(value, hc),
        method=r.method,
        err_est=abs(factor) * r.err_est,
    )
