"""Eigenpolynomial construction via the vertical-strip recurrence.

Polynomials live in the monomial basis e_kappa = prod_j e_j^(kappa_j -
kappa_{j+1}) (kappa_{n+1} = 0); exponent keys are stored as the partition
kappa itself.  A built P_mu is unitriangular in the dominance order: its
leading coefficient at mu is exactly 1 and every other key is strictly
dominated by mu, with all keys sharing the weight |mu|.

The recurrence is resolved iteratively over the dependency cone ordered by
the (span, leading-run) induction, so recursion depth never grows with the
weight.  The table of built polynomials is append-only and idempotent.
"""

from __future__ import annotations

from .errors import GenericityViolation
from .kernel import GENERICITY_TOL, ModelParams, g_regularity_margin, realify
from .partitions import (
    Partition,
    check_partition,
    column,
    r_index,
    span,
    vertical_strips,
    weight,
    zero,
)
from . import coeffs

PRUNE_REL = 1e-13


class PolynomialInE:
    """Sparse real-coefficient polynomial keyed by partition exponents."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[Partition, float] | None = None, prune: bool = True):
        self.n = n
        self.coeffs: dict[Partition, float] = dict(coeffs or {})
        if prune:
            self.prune()

    @classmethod
    def one(cls, n: int) -> "PolynomialInE":
        return cls(n, {zero(n): 1.0}, prune=False)

    def prune(self) -> None:
        """Drop coefficients below PRUNE_REL relative to the largest one."""
        if not self.coeffs:
            return
        cut = PRUNE_REL * max(abs(v) for v in self.coeffs.values())
        self.coeffs = {k: v for k, v in self.coeffs.items() if abs(v) > cut}

    def max_abs(self) -> float:
        return max((abs(v) for v in self.coeffs.values()), default=0.0)

    def items(self):
        return self.coeffs.items()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:  # pragma: no cover
        body = ", ".join(f"{k}: {v:.6g}" for k, v in sorted(self.coeffs.items()))
        return f"PolynomialInE(n={self.n}, {{{body}}})"


_P_CACHE: dict[tuple[ModelParams, Partition], PolynomialInE] = {}


def clear_poly_cache() -> None:
    _P_CACHE.clear()


def _check_buildable(mu: Partition, params: ModelParams) -> None:
    """Admission gate: level-locked spans up to m+1, otherwise generic coupling.

    The recurrence only divides by brackets at x + j*g with j <= n - 1, so
    the margin is probed on that range.
    """
    if params.level_locked and span(mu) <= params.m + 1:
        return
    window = max(weight(mu), 1)
    margin = g_regularity_margin(params.alpha, params.g, params.n, window, jmax=params.n - 1)
    if margin >= GENERICITY_TOL:
        return
    raise GenericityViolation(
        f"cannot build P_{mu}: coupling g={params.g} is resonant for this span "
        f"(level_locked={params.level_locked}, span={span(mu)}, m={params.m})"
    )


def _shift_by_column(poly: PolynomialInE, r: int) -> dict[Partition, float]:
    """Multiply by the monomial e_r, i.e. add the column 1^r to every key."""
    col = column(poly.n, r)
    return {tuple(a + b for a, b in zip(key, col)): v for key, v in poly.items()}


def build_P(mu, params: ModelParams) -> PolynomialInE:
    """Eigenpolynomial P_mu from the strip recurrence, memoized per params.

    P_0 = 1 and, for mu != 0 with r the leading-run index and lam = mu - 1^r,

        P_mu = e_r * P_lam - sum_{nu strips of lam, nu != mu} psi'_{nu/lam} P_nu.

    The dependency cone is resolved with an explicit worklist.
    """
    mu = check_partition(mu)
    if len(mu) != params.n:
        raise ValueError(f"partition length {len(mu)} does not match n={params.n}")
    _check_buildable(mu, params)
    key = (params, mu)
    cached = _P_CACHE.get(key)
    if cached is not None:
        return cached

    stack = [mu]
    while stack:
        top = stack[-1]
        if (params, top) in _P_CACHE:
            stack.pop()
            continue
        if weight(top) == 0:
            _P_CACHE[(params, top)] = PolynomialInE.one(params.n)
            stack.pop()
            continue
        r = r_index(top)
        lam = tuple(x - 1 if i < r else x for i, x in enumerate(top))
        siblings = [nu for nu in vertical_strips(lam, r) if nu != top]
        missing = [dep for dep in [lam, *siblings] if (params, dep) not in _P_CACHE]
        if missing:
            stack.extend(missing)
            continue
        stack.pop()

        acc = _shift_by_column(_P_CACHE[(params, lam)], r)
        for nu in siblings:
            w = realify(coeffs.psi_prime(lam, nu, params))
            for k, v in _P_CACHE[(params, nu)].items():
                acc[k] = acc.get(k, 0.0) - w * v
        acc[top] = 1.0  # unit leading coefficient, set rather than computed
        poly = PolynomialInE(params.n, acc)
        wt = weight(top)
        if any(weight(k) != wt for k in poly.coeffs):
            raise AssertionError(f"inhomogeneous expansion for {top}")
        _P_CACHE[(params, top)] = poly

    return _P_CACHE[key]


def evaluate(P: PolynomialInE, e) -> complex:
    """Evaluate at a point e = (e_1, ..., e_n); powers are memoized per call."""
    if len(e) != P.n:
        raise ValueError(f"evaluation point has length {len(e)}, expected {P.n}")
    ev = [complex(x) for x in e]
    powers: dict[tuple[int, int], complex] = {}

    def pw(j: int, k: int) -> complex:
        if k == 0:
            return 1.0 + 0.0j
        got = powers.get((j, k))
        if got is None:
            got = ev[j] ** k
            powers[(j, k)] = got
        return got

    n = P.n
    total = 0.0 + 0.0j
    for kappa, u in P.items():
        term = complex(u)
        for j in range(n):
            exp = kappa[j] - (kappa[j + 1] if j + 1 < n else 0)
            if exp:
                term *= pw(j, exp)
        total += term
    return total


def evaluation_scale(P: PolynomialInE, e) -> float:
    """Conditioning scale: the same sum with every factor in absolute value."""
    ev = [abs(complex(x)) for x in e]
    n = P.n
    total = 0.0
    for kappa, u in P.items():
        term = abs(u)
        for j in range(n):
            exp = kappa[j] - (kappa[j + 1] if j + 1 < n else 0)
            if exp:
                term *= ev[j] ** exp
        total += term
    return max(total, 1.0)


def normalized_p(mu, e, params: ModelParams) -> complex:
    """Normalized lattice value c_mu * P_mu(e)."""
    mu = check_partition(mu)
    c = realify(coeffs.c_norm(mu, params))
    return c * evaluate(build_P(mu, params), e)


def elementary_symmetric(x) -> list[complex]:
    """Elementary symmetric polynomials e_1..e_n of the sequence x."""
    es = [1.0 + 0.0j]
    for xv in x:
        xv = complex(xv)
        es = [es[0]] + [es[i] + xv * es[i - 1] for i in range(1, len(es))] + [xv * es[-1]]
    return es[1:]


def evaluate_R(mu, x, params: ModelParams) -> complex:
    """Symmetric-polynomial embedding: P_mu evaluated at e_r = e_r(x)."""
    mu = check_partition(mu)
    if len(x) != params.n:
        raise ValueError(f"point has {len(x)} variables, expected n={params.n}")
    return evaluate(build_P(mu, params), elementary_symmetric(x))
