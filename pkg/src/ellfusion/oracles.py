"""Independent limit-endpoint implementations used as ground truth.

Nothing in this module touches the elliptic kernel or the eigenpolynomial
table: Schur polynomials come from semistandard tableau enumeration (and
from the dual determinant identity for expansions over elementary symmetric
polynomials), the trigonometric recurrence weights are direct sine-ratio
products, and classical fusion coefficients come from a sine-form spectral
sum with a numerically inverted matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import NonIntegral, NotAStrip
from .kernel import qpow, trig_bracket, trig_factorial
from .partitions import (
    Partition,
    check_partition,
    enumerate_level,
    is_partition,
    r_index,
    vertical_strips,
    weight,
)

_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Schur polynomials

def schur_eval(mu, x) -> complex:
    """Schur polynomial by summing x^weight over semistandard tableaux.

    Rows weakly increase, columns strictly increase, entries range over
    1..len(x).  Exponential in |mu|, which is fine at desk scale.
    """
    mu = check_partition(mu)
    n = len(x)
    shape = [row for row in mu if row > 0]
    if not shape:
        return 1.0 + 0.0j
    if len(shape) > n:
        return 0.0 + 0.0j
    xs = [complex(v) for v in x]
    cells = [(r, c) for r, rowlen in enumerate(shape) for c in range(rowlen)]
    entries: dict[tuple[int, int], int] = {}
    total = 0.0 + 0.0j

    def fill(i: int, prod: complex) -> None:
        nonlocal total
        if i == len(cells):
            total += prod
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, entries[(r, c - 1)])
        if r > 0:
            lo = max(lo, entries[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            entries[(r, c)] = v
            fill(i + 1, prod * xs[v - 1])
        entries.pop((r, c), None)

    fill(0, 1.0 + 0.0j)
    return total


def _conjugate(mu: Partition) -> list[int]:
    if mu[0] == 0:
        return []
    return [sum(1 for row in mu if row >= i) for i in range(1, mu[0] + 1)]


def schur_in_elementary(mu, n: int) -> dict[Partition, int]:
    """Schur polynomial expanded over elementary symmetric polynomials.

    Dual determinant identity: s_mu = det(e_{mu'_i - i + j}) over the
    conjugate shape, expanded over permutations.  A product e_{c_1}...e_{c_l}
    maps to the exponent key kappa with kappa_j = #{i : c_i >= j}.
    """
    mu = check_partition(mu)
    conj = _conjugate(mu)
    ell = len(conj)
    out: dict[Partition, int] = {}
    if ell == 0:
        out[(0,) * n] = 1
        return out
    for sigma in permutations(range(ell)):
        cols = []
        ok = True
        for i in range(ell):
            c = conj[i] - (i + 1) + (sigma[i] + 1)
            if c < 0 or c > n:
                ok = False
                break
            cols.append(c)
        if not ok:
            continue
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if sigma[i] > sigma[j]:
                    sign = -sign
        key = tuple(sum(1 for c in cols if c >= j) for j in range(1, n + 1))
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Trigonometric (nome -> 0) endpoints

def macdonald_pieri_p0(lam, nu, alpha: float, g: float) -> float:
    """Trigonometric limit of the strip weight as a product of sine ratios."""
    lam = check_partition(lam)
    nu = tuple(int(v) for v in nu)
    theta = tuple(b - a for a, b in zip(lam, nu))
    if any(t not in (0, 1) for t in theta) or not is_partition(nu):
        raise NotAStrip(f"{nu} is not a vertical strip over {lam}")
    n = len(lam)
    out = 1.0
    for j in range(n):
        for k in range(j + 1, n):
            if theta[j] - theta[k] != -1:
                continue
            dn = nu[j] - nu[k]
            dl = lam[j] - lam[k]
            out *= trig_bracket(dn + g * (k - j + 1), alpha) / trig_bracket(dn + g * (k - j), alpha)
            out *= trig_bracket(dl + g * (k - j - 1), alpha) / trig_bracket(dl + g * (k - j), alpha)
    return out


def principal_normalization_p0(nu, alpha: float, g: float) -> float:
    """Product form of the principal specialization (reciprocal of the p=0
    normalization coefficient): prod_{j<k} [(k-j+1)g]_{q,d} / [(k-j)g]_{q,d}."""
    nu = check_partition(nu)
    n = len(nu)
    out = 1.0
    for j in range(n):
        for k in range(j + 1, n):
            d = nu[j] - nu[k]
            out *= trig_factorial((k - j + 1) * g, d, alpha) / trig_factorial((k - j) * g, d, alpha)
    return out


# ---------------------------------------------------------------------------
# Trigonometric basis polynomials and their structure coefficients
# (an independent seed for the nome -> 0 comparisons; deliberately separate
# from the elliptic polynomial table)

def _trig_polys(mu: Partition, alpha: float, g: float, table: dict) -> dict:
    stack = [mu]
    n = len(mu)
    while stack:
        top = stack[-1]
        if top in table:
            stack.pop()
            continue
        if weight(top) == 0:
            table[top] = {top: 1.0}
            stack.pop()
            continue
        r = r_index(top)
        lam = tuple(x - 1 if i < r else x for i, x in enumerate(top))
        siblings = [nu for nu in vertical_strips(lam, r) if nu != top]
        missing = [dep for dep in [lam, *siblings] if dep not in table]
        if missing:
            stack.extend(missing)
            continue
        stack.pop()
        col = (1,) * r + (0,) * (n - r)
        acc = {
            tuple(a + b for a, b in zip(key, col)): v for key, v in table[lam].items()
        }
        for nu in siblings:
            w = macdonald_pieri_p0(lam, nu, alpha, g)
            for k, v in table[nu].items():
                acc[k] = acc.get(k, 0.0) - w * v
        acc[top] = 1.0
        table[top] = {k: v for k, v in acc.items() if abs(v) > 1e-13}
    return table[mu]


def macdonald_lr_p0(lam, mu, alpha: float, g: float) -> dict[Partition, float]:
    """Structure coefficients of the trigonometric basis polynomials.

    Multiplies the two expansions and peels greedily against the same
    trigonometric table; independent of the elliptic code path.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    table: dict = {}
    P = _trig_polys(lam, alpha, g, table)
    Q = _trig_polys(mu, alpha, g, table)
    work: dict[Partition, float] = {}
    for k1, v1 in P.items():
        for k2, v2 in Q.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            work[key] = work.get(key, 0.0) + v1 * v2
    scale = max(abs(v) for v in work.values())
    out: dict[Partition, float] = {}
    while work:
        kappa = max(work)
        c = work.pop(kappa)
        if abs(c) <= 1e-12 * scale:
            continue
        out[kappa] = c
        for k, u in _trig_polys(kappa, alpha, g, table).items():
            if k != kappa:
                work[k] = work.get(k, 0.0) - c * u
    return {k: v for k, v in out.items() if abs(v) > 1e-9 * scale}


# ---------------------------------------------------------------------------
# Classical fusion via the sine-form spectral sum

def kac_peterson_smatrix(n: int, m: int) -> tuple[list[Partition], np.ndarray]:
    """Sine-form modular matrix built from Schur principal specializations.

    S_{lam,nu} = q^(-|lam||nu|/n - (n-1)(|lam|+|nu|)/2)
                 * s_lam(q^(nu_1+n-1), ..., q^(nu_{n-1}+1), 1)
                 * s_nu(q^(n-1), ..., q, 1),  q = exp(2 pi i / (m+n)).
    """
    labels = enumerate_level(n, m)
    alpha = _TWO_PI / (m + n)
    xs0 = [qpow(alpha, n - 1 - j) for j in range(n)]
    S = np.empty((len(labels), len(labels)), dtype=complex)
    for j, nu in enumerate(labels):
        xs = [qpow(alpha, nu[i] + n - 1 - i) for i in range(n - 1)] + [1.0 + 0.0j]
        s_nu0 = schur_eval(nu, xs0)
        for i, lam in enumerate(labels):
            pref = qpow(alpha, -weight(lam) * weight(nu) / n - (n - 1) * (weight(lam) + weight(nu)) / 2.0)
            S[i, j] = pref * schur_eval(lam, xs) * s_nu0
    return labels, S


def classical_fusion(lam, mu, n: int, m: int) -> dict[Partition, int]:
    """Classical level-m fusion coefficients from the sine-form spectral sum.

    Values are rounded to the nearest integer; a rounding residue above
    1e-6 raises NonIntegral.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    labels, S = kac_peterson_smatrix(n, m)
    Sinv = np.linalg.inv(S)
    index = {l: i for i, l in enumerate(labels)}
    i_lam, i_mu = index[lam], index[mu]
    weights = S[i_lam, :] * S[i_mu, :] / S[0, :]
    vec = weights @ Sinv
    out: dict[Partition, int] = {}
    for k, kappa in enumerate(labels):
        v = complex(vec[k])
        nearest = round(v.real)
        if abs(v - nearest) > 1e-6:
            raise NonIntegral(f"fusion value {v!r} for {kappa} is not integral")
        if nearest:
            out[kappa] = int(nearest)
    return out


# ---------------------------------------------------------------------------
# Report plumbing

@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle comparison."""

    comparison: str
    max_abs: float
    max_rel: float
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "comparison": self.comparison,
            "max_abs": self.max_abs,
            "max_rel": self.max_rel,
            "tol": self.tol,
            "passed": self.passed,
        }


def make_report(comparison: str, pairs, tol: float, relative: bool = False) -> OracleReport:
    """Build a report from (computed, expected) pairs of complex scalars."""
    max_abs = 0.0
    max_rel = 0.0
    for got, want in pairs:
        diff = abs(complex(got) - complex(want))
        max_abs = max(max_abs, diff)
        max_rel = max(max_rel, diff / max(1e-300, abs(complex(want))))
    measured = max_rel if relative else max_abs
    return OracleReport(comparison, max_abs, max_rel, tol, measured < tol)
