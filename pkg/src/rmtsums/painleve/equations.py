"""
Sigma-form Painleve equations as LHS - RHS term lists.

Each ``*_terms`` function returns the signed terms whose sum is the
residual; :func:`combine` sums them and normalizes by the largest term so
that t^3 growth does not hide small-t failures.
"""

from typing import Callable, Sequence

from rmtsums.painleve.config import ResidualValue

Terms = tuple[float, ...]


def sigma_p3_terms(s: float, t: float, tau: float, dtau: float, d2tau: float) -> Terms:
    """(t tau'')^2 + 4t (tau')^3 - (4s^2 + 4 tau)(tau')^2 - t tau' + tau."""
    return (
        (t * d2tau) ** 2,
        4.0 * t * dtau**3,
        -(4.0 * s * s + 4.0 * tau) * dtau**2,
        -t * dtau,
        tau,
    )


def p5_terms(s: float, n: int, t: float, tau: float, dtau: float, d2tau: float) -> Terms:
    """Finite-N Painleve V in sigma form, with the 1/N and 1/N^2 corrections."""
    a = 1.0 + 2.0 * s / n
    return (
        (t * d2tau) ** 2,
        4.0 * t * dtau**3,
        -(4.0 * s * s + 4.0 * tau + t * t / n**2) * dtau**2,
        -t * (a - 2.0 * tau / n**2) * dtau,
        (a - tau / n**2) * tau,
    )


def hankel_terms(
    n: int, alpha: float, lam: float, t: float, h: float, dh: float, d2h: float
) -> Terms:
    """Sigma form for H_N = t d/dt log det[int y^{j+k} (y+t)^lam y^alpha e^{-y} dy]."""
    inner = t * dh - h
    return (
        (t * d2h) ** 2,
        -((inner + dh * (2 * n + alpha + lam) + n * lam) ** 2),
        4.0 * dh * (inner + n * (n + alpha + lam)) * (dh + lam),
    )


def bessel_inf_terms(nu: float, t: float, h: float, dh: float, d2h: float) -> Terms:
    """(t h'')^2 - 4 (h')^2 (h - t h') - 2 nu h' - 1."""
    return (
        (t * d2h) ** 2,
        -4.0 * dh * dh * (h - t * dh),
        -2.0 * nu * dh,
        -1.0,
    )


def bessel_finite_terms(
    nu: float, n: int, t: float, xi: float, dxi: float, d2xi: float
) -> Terms:
    """(t xi'')^2 + 4t (xi')^3 - (nu^2 + 4 xi + 4t/N)(xi')^2 - (2 nu - 4 xi/N) xi' - 1."""
    return (
        (t * d2xi) ** 2,
        4.0 * t * dxi**3,
        -(nu * nu + 4.0 * xi + 4.0 * t / n) * dxi**2,
        -(2.0 * nu - 4.0 * xi / n) * dxi,
        -1.0,
    )


def combine(
    terms: Sequence[float], t: float, err_est: float = 0.0, step: float = 0.0
) -> ResidualValue:
    """Sum the terms and normalize by max(1, max |term|)."""
    raw = float(sum(terms))
    scale = max(1.0, max(abs(term) for term in terms))
    return ResidualValue(
        t=t, raw=raw, normalized=raw / scale, scale=scale, err_est=err_est / scale, step=step
    )


def propagated_error(
    terms_of: Callable[[float, float, float], Terms],
    triple: tuple[float, float, float],
    err: float,
) -> float:
    """
    First-order error of the residual when each of (f, f', f'') is off by ``err``.

    Parameters
    ----------
    terms_of : callable
        (f, f', f'') -> terms, with the equation parameters bound.
    triple : tuple of float
        Evaluated (f, f', f'').
    err : float
        Common absolute error of the triple.

    Returns
    -------
    float
        Sum over the three inputs of |R(x + err e_i) - R(x)|.
    """
    if err == 0.0:
        return 0.0
    base = sum(terms_of(*triple))
    total = 0.0
    for i in range(3):
        shifted = list(triple)
        shifted[i] += err
        total += abs(sum(terms_of(*shifted)) - base)
    return total
