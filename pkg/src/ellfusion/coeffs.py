"""Closed-form coefficient evaluators for the discrete difference operators.

Four product formulas drive everything downstream: the hopping weights
B_{nu/lam}, the recurrence/Pieri weights psi'_{nu/lam}, the normalization
c_mu, and the orthogonality weights Delta_lam.  All four are evaluated on the
complex path and memoized per parameter set; values are real in the
level-locked regime and converted at API boundaries by the callers.

Denominator brackets below ``SINGULAR_TOL`` in magnitude raise
:class:`SingularDenominator`; zeros appearing in numerators are genuine
(boundary) zeros and pass through.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotAStrip, SingularDenominator
from .kernel import SINGULAR_TOL, ModelParams, bracket
from .partitions import Partition, is_partition

_CACHE_SIZE = 1 << 18


def strip_pattern(lam: Partition, nu: Partition) -> tuple[int, ...]:
    """Increment pattern theta = nu - lam, validated as a vertical strip."""
    if len(lam) != len(nu):
        raise NotAStrip(f"length mismatch between {lam} and {nu}")
    theta = tuple(b - a for a, b in zip(lam, nu))
    if any(t not in (0, 1) for t in theta) or not is_partition(nu) or not is_partition(lam):
        raise NotAStrip(f"{nu} is not a vertical strip over {lam}")
    return theta


def _ratio(num_arg: float, den_arg: float, params: ModelParams) -> complex:
    den = bracket(den_arg, params)
    if abs(den) < SINGULAR_TOL:
        raise SingularDenominator(f"bracket [{den_arg}] vanished (|.| < {SINGULAR_TOL})")
    return bracket(num_arg, params) / den


def _factorial_ratio(num_base: float, den_base: float, k: int, params: ModelParams) -> complex:
    """Factor-by-factor ratio of ascending bracket products of equal length."""
    out = 1.0 + 0.0j
    for l in range(k):
        out *= _ratio(num_base + l, den_base + l, params)
    return out


@lru_cache(maxsize=_CACHE_SIZE)
def hop_B(lam: Partition, nu: Partition, params: ModelParams) -> complex:
    """Hopping weight of the discrete difference operator for the move lam -> nu.

    Product over all pairs j < k of
    [lam_j - lam_k + g(k - j + theta_j - theta_k)] / [lam_j - lam_k + g(k - j)].
    """
    theta = strip_pattern(lam, nu)
    g = params.g
    n = len(lam)
    out = 1.0 + 0.0j
    for j in range(n):
        for k in range(j + 1, n):
            d = lam[j] - lam[k]
            out *= _ratio(d + g * (k - j + theta[j] - theta[k]), d + g * (k - j), params)
    return out


@lru_cache(maxsize=_CACHE_SIZE)
def psi_prime(lam: Partition, nu: Partition, params: ModelParams) -> complex:
    """Recurrence/Pieri weight for the strip nu over lam.

    Product over pairs j < k with theta_j - theta_k = -1 of
    [nu_j-nu_k+g(k-j+1)]/[nu_j-nu_k+g(k-j)] *
    [lam_j-lam_k+g(k-j-1)]/[lam_j-lam_k+g(k-j)].
    """
    theta = strip_pattern(lam, nu)
    g = params.g
    n = len(lam)
    out = 1.0 + 0.0j
    for j in range(n):
        for k in range(j + 1, n):
            if theta[j] - theta[k] != -1:
                continue
            dn = nu[j] - nu[k]
            dl = lam[j] - lam[k]
            out *= _ratio(dn + g * (k - j + 1), dn + g * (k - j), params)
            out *= _ratio(dl + g * (k - j - 1), dl + g * (k - j), params)
    return out


@lru_cache(maxsize=_CACHE_SIZE)
def c_norm(mu: Partition, params: ModelParams) -> complex:
    """Normalization coefficient: product of elliptic-factorial ratios.

    Positive for mu in the level cone when g > 0 in level-locked mode.
    """
    g = params.g
    n = len(mu)
    out = 1.0 + 0.0j
    for j in range(n):
        for k in range(j + 1, n):
            out *= _factorial_ratio((k - j) * g, (k - j + 1) * g, mu[j] - mu[k], params)
    return out


@lru_cache(maxsize=_CACHE_SIZE)
def delta_weight(lam: Partition, params: ModelParams) -> complex:
    """Orthogonality weight of the inner product on the level cone."""
    g = params.g
    n = len(lam)
    out = 1.0 + 0.0j
    for j in range(n):
        for k in range(j + 1, n):
            d = lam[j] - lam[k]
            out *= _ratio(d + (k - j) * g, (k - j) * g, params)
            out *= _factorial_ratio((k - j + 1) * g, 1.0 + (k - j - 1) * g, d, params)
    return out


def clear_coeff_caches() -> None:
    """Drop all memoized coefficients (mainly for tests and long sweeps)."""
    hop_B.cache_clear()
    psi_prime.cache_clear()
    c_norm.cache_clear()
    delta_weight.cache_clear()
