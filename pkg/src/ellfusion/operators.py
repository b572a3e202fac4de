"""Discrete difference operators on partitions and their joint spectrum.

``apply_D`` realizes the finitely-supported action on the full partition
lattice.  ``build_truncated`` materializes the level-truncated operators as
square matrices over the level-m cone; conjugated by the square root of the
orthogonality weights they become normal matrices, so the joint spectrum is
obtained by diagonalizing a random real combination and reading off Rayleigh
ratios.  Labels are assigned at p = 0 against the trigonometric closed form
and continued analytically in the nome with an adaptive step that keeps
every eigenvalue within half the minimal inter-eigenvalue gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ComputationError, DegenerateCombination, TrackingAmbiguity
from .kernel import ModelParams, qpow, realify
from .partitions import Partition, enumerate_level, span, underline, vertical_strips, weight
from .polynomials import build_P, elementary_symmetric, evaluate
from . import coeffs

LatticeFunction = dict[Partition, complex]

_START_STEP = 0.05
_MIN_STEP = 1e-4
_GAP_SAFETY = 0.5
_COMBO_ATTEMPTS = 12


def apply_D(r: int, f: LatticeFunction, lam: Partition, params: ModelParams) -> complex:
    """Value of the r-th difference operator applied to f, at the site lam."""
    if not 1 <= r <= params.n:
        raise ValueError(f"need 1 <= r <= n, got r={r}")
    total = 0.0 + 0.0j
    for nu in vertical_strips(lam, r):
        fv = f.get(nu)
        if fv:
            total += coeffs.hop_B(lam, nu, params) * fv
    return total


@dataclass(frozen=True)
class TruncatedOperator:
    """Level-truncated difference operator as a matrix over the level cone."""

    r: int
    params: ModelParams
    labels: tuple[Partition, ...]
    matrix: np.ndarray


def build_truncated(r: int, params: ModelParams) -> TruncatedOperator:
    """Matrix of the r-th truncated operator on the level-m cone.

    Row lam gets the hop weight B_{nu/lam} in column underline(nu) for every
    size-r strip nu with span(nu) <= m; other entries are zero.
    """
    if not params.level_locked:
        raise ValueError("truncated operators require level-locked parameters")
    if not 1 <= r <= params.n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}")
    labels = enumerate_level(params.n, params.m)
    index = {lam: i for i, lam in enumerate(labels)}
    mat = np.zeros((len(labels), len(labels)), dtype=complex)
    for i, lam in enumerate(labels):
        for nu in vertical_strips(lam, r):
            if span(nu) <= params.m:
                mat[i, index[underline(nu)]] = coeffs.hop_B(lam, nu, params)
    return TruncatedOperator(r, params, tuple(labels), mat)


def delta_vector(params: ModelParams, labels=None) -> np.ndarray:
    """Orthogonality weights over the level cone, checked real positive."""
    if labels is None:
        labels = enumerate_level(params.n, params.m)
    vals = np.array([realify(coeffs.delta_weight(lam, params)) for lam in labels])
    if np.any(vals <= 0):
        raise ComputationError("orthogonality weights must be positive on the level cone")
    return vals


def conjugated_matrices(params: ModelParams) -> tuple[list[np.ndarray], np.ndarray, tuple[Partition, ...]]:
    """W D_r W^-1 for r = 1..n-1 with W = diag(sqrt(Delta)); these are normal."""
    ops = [build_truncated(r, params) for r in range(1, params.n)]
    labels = ops[0].labels
    w = np.sqrt(delta_vector(params, labels))
    mats = [(w[:, None] * op.matrix) / w[None, :] for op in ops]
    return mats, w, labels


def normality_residual(op: TruncatedOperator) -> float:
    """Relative Frobenius residual of M M* - M* M for M = W D W^-1."""
    w = np.sqrt(delta_vector(op.params, op.labels))
    M = (w[:, None] * op.matrix) / w[None, :]
    comm = M @ M.conj().T - M.conj().T @ M
    denom = np.linalg.norm(M, "fro") ** 2
    return float(np.linalg.norm(comm, "fro") / max(denom, 1e-300))


def spectral_points_p0(params: ModelParams) -> dict[Partition, np.ndarray]:
    """Trigonometric closed form of the joint eigenvalues at p = 0.

    e_{r,nu} = q^(-r(|nu|/n + (n-1)g/2)) e_r(q^(nu_1+(n-1)g), ..., q^(nu_{n-1}+g), 1)
    with q = exp(i*alpha).
    """
    n, g, alpha = params.n, params.g, params.alpha
    out: dict[Partition, np.ndarray] = {}
    for nu in enumerate_level(params.n, params.m):
        xs = [qpow(alpha, nu[j] + (n - 1 - j) * g) for j in range(n - 1)] + [1.0 + 0.0j]
        es = elementary_symmetric(xs)
        wnu = weight(nu)
        vals = [
            qpow(alpha, -r * (wnu / n + (n - 1) * g / 2.0)) * es[r - 1]
            for r in range(1, n)
        ]
        out[nu] = np.array(vals, dtype=complex)
    return out


@dataclass(frozen=True)
class SpectralPoint:
    """One joint eigenvalue: full e-vector (e_n = 1), eigenvector, dual norm."""

    e: tuple[complex, ...]
    eigenvector: dict[Partition, complex]
    dual_norm: float


@dataclass(frozen=True)
class SpectrumResult:
    """Joint spectrum of the truncated operators, labeled over the level cone."""

    params: ModelParams
    labels: tuple[Partition, ...]
    points: dict[Partition, SpectralPoint]
    seed: int
    homotopy_steps: tuple[float, ...]

    def e_matrix(self) -> np.ndarray:
        """Rows of truncated eigenvalues (without the trailing 1), label order."""
        return np.array([self.points[nu].e[:-1] for nu in self.labels], dtype=complex)


def _raw_spectrum(params: ModelParams, rng: np.random.Generator):
    """Unlabeled joint eigen-data of a random combination of the conjugated ops."""
    mats, w, labels = conjugated_matrices(params)
    N = len(labels)
    vals = vecs = None
    for _ in range(_COMBO_ATTEMPTS):
        t = rng.standard_normal(len(mats))
        A = sum(ti * Mi for ti, Mi in zip(t, mats))
        vals, vecs = np.linalg.eig(A)
        if N == 1:
            break
        scale = max(1.0, float(np.abs(vals).max()))
        gap = min(
            abs(vals[i] - vals[j]) for i in range(N) for j in range(i + 1, N)
        )
        if gap > 1e-7 * scale:
            break
    else:
        raise DegenerateCombination(
            "random combinations kept producing clustered eigenvalues"
        )
    E = np.empty((N, len(mats)), dtype=complex)
    for i in range(N):
        v = vecs[:, i]
        nrm = np.vdot(v, v)
        for r, M in enumerate(mats):
            E[i, r] = np.vdot(v, M @ v) / nrm
    return E, vecs, w, labels


def _min_gap(E: np.ndarray) -> float:
    N = E.shape[0]
    if N < 2:
        return math.inf
    return min(
        float(np.linalg.norm(E[i] - E[j])) for i in range(N) for j in range(i + 1, N)
    )


def _match_rows(E_new: np.ndarray, E_ref: np.ndarray) -> np.ndarray:
    """Bijective nearest-distance matching; perm[i] is the new row for ref row i."""
    dist = np.linalg.norm(E_new[None, :, :] - E_ref[:, None, :], axis=2)
    rows, cols = linear_sum_assignment(dist)
    perm = np.empty(E_ref.shape[0], dtype=int)
    perm[rows] = cols
    return perm


def joint_spectrum(params: ModelParams, seed: int = 0) -> SpectrumResult:
    """Labeled joint spectrum with eigenvectors and dual norms.

    Labels are assigned at p = 0 against the closed form; for p != 0 the
    points are continued from p = 0 with adaptive steps (start 0.05, halve
    on ambiguity, floor 1e-4), matching by nearest distance and requiring
    every movement to stay below half the minimal gap.
    """
    rng = np.random.default_rng(seed)
    base_params = params.with_p(0.0)
    E_raw, vecs, w, labels = _raw_spectrum(base_params, rng)
    closed = spectral_points_p0(params)
    C = np.array([closed[nu] for nu in labels], dtype=complex)
    perm = _match_rows(E_raw, C)
    gap0 = _min_gap(C)
    moved = max(
        float(np.linalg.norm(E_raw[perm[i]] - C[i])) for i in range(len(labels))
    )
    if moved >= _GAP_SAFETY * gap0:
        raise TrackingAmbiguity(
            f"p=0 spectrum does not match the closed form (moved {moved:.3e}, gap {gap0:.3e})"
        )
    E_cur = E_raw[perm]
    vec_cur = vecs[:, perm]
    w_cur = w
    steps: list[float] = []

    target = params.p
    p_cur = 0.0
    step = math.copysign(_START_STEP, target) if target else 0.0
    while p_cur != target:
        p_next = p_cur + step
        if (target > 0 and p_next > target) or (target < 0 and p_next < target):
            p_next = target
        E_new, vecs_new, w_new, _ = _raw_spectrum(params.with_p(p_next), rng)
        perm = _match_rows(E_new, E_cur)
        gap = _min_gap(E_cur)
        moved = max(
            float(np.linalg.norm(E_new[perm[i]] - E_cur[i])) for i in range(len(labels))
        )
        if moved < _GAP_SAFETY * gap:
            E_cur = E_new[perm]
            vec_cur = vecs_new[:, perm]
            w_cur = w_new
            p_cur = p_next
            steps.append(p_next)
        else:
            step /= 2.0
            if abs(step) < _MIN_STEP:
                raise TrackingAmbiguity(
                    f"homotopy step fell below {_MIN_STEP} at p={p_cur}"
                )

    cvec = [realify(coeffs.c_norm(lam, params)) for lam in labels]
    polys = [build_P(lam, params) for lam in labels]
    dvec = delta_vector(params, labels)
    points: dict[Partition, SpectralPoint] = {}
    for i, nu in enumerate(labels):
        e_full = tuple(E_cur[i]) + (1.0 + 0.0j,)
        f = vec_cur[:, i] / w_cur
        if abs(f[0]) < 1e-12 * np.abs(f).max():
            raise ComputationError("eigenvector vanishes at the origin site")
        f = f / f[0]
        pv = np.array([cvec[j] * evaluate(polys[j], e_full) for j in range(len(labels))])
        nrm = float(np.sum(np.abs(pv) ** 2 * dvec))
        points[nu] = SpectralPoint(
            e=e_full,
            eigenvector={lam: complex(f[j]) for j, lam in enumerate(labels)},
            dual_norm=1.0 / nrm,
        )
    return SpectrumResult(
        params=params,
        labels=tuple(labels),
        points=points,
        seed=seed,
        homotopy_steps=tuple(steps),
    )


def dual_orthogonality_check(
    params: ModelParams, spectrum: SpectrumResult | None = None, seed: int = 0
) -> float:
    """Worst deviation of the dual Gram matrix from the predicted diagonal.

    Off-diagonal entries are normalized by the geometric mean of the
    diagonals; diagonal entries are compared in relative error against
    1 / (c_lam^2 Delta_lam).
    """
    spec = spectrum if spectrum is not None else joint_spectrum(params, seed=seed)
    labels = spec.labels
    N = len(labels)
    polys = [build_P(lam, params) for lam in labels]
    vals = np.array(
        [
            [evaluate(polys[i], spec.points[nu].e) for nu in labels]
            for i in range(N)
        ],
        dtype=complex,
    )
    dual = np.array([spec.points[nu].dual_norm for nu in labels])
    G = (vals * dual[None, :]) @ vals.conj().T
    cvec = np.array([realify(coeffs.c_norm(lam, params)) for lam in labels])
    dvec = delta_vector(params, labels)
    targets = 1.0 / (cvec**2 * dvec)
    worst = 0.0
    for i in range(N):
        worst = max(worst, abs(G[i, i] - targets[i]) / abs(targets[i]))
        for j in range(N):
            if i != j:
                worst = max(worst, abs(G[i, j]) / math.sqrt(abs(G[i, i]) * abs(G[j, j])))
    return float(worst)
