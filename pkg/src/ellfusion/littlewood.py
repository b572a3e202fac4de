"""Products in the eigenpolynomial basis and their structure coefficients.

Multiplication is a sparse convolution under key addition (the monomial
basis is multiplicative).  Basis expansion peels the dominance-maximal key
greedily; since dominance implies lexicographic order, the lexicographically
largest remaining key is always a valid (and deterministic) choice.
"""

from __future__ import annotations

from .errors import ComputationError, NonTerminating
from .kernel import ModelParams
from .partitions import Partition, add, check_partition, contains, weight
from .polynomials import PolynomialInE, build_P

SUPPORT_CUT = 1e-9
_PEEL_FLOOR_REL = 1e-12


def multiply_monomial(P: PolynomialInE, Q: PolynomialInE) -> PolynomialInE:
    """Product of two sparse polynomials: convolution under key addition."""
    if P.n != Q.n:
        raise ValueError("polynomials live in different variable counts")
    out: dict[Partition, float] = {}
    for k1, v1 in P.items():
        for k2, v2 in Q.items():
            key = add(k1, k2)
            out[key] = out.get(key, 0.0) + v1 * v2
    return PolynomialInE(P.n, out)


def expand_in_P(F: PolynomialInE, params: ModelParams) -> dict[Partition, float]:
    """Expansion coefficients of F over the eigenpolynomial basis.

    Greedy peeling: repeatedly subtract coeff * P_kappa for the
    lexicographically largest remaining key kappa.  Unitriangularity makes
    each step cancel kappa exactly and only introduce smaller keys, so the
    loop terminates; a guard converts a stalled peel into NonTerminating.
    """
    work = dict(F.coeffs)
    if not work:
        return {}
    scale = max(abs(v) for v in work.values())
    floor = _PEEL_FLOOR_REL * scale
    out: dict[Partition, float] = {}
    max_steps = 64 * (len(work) + 8) ** 2
    steps = 0
    while work:
        steps += 1
        if steps > max_steps:
            raise NonTerminating("basis peeling failed to exhaust the residual")
        kappa = max(work)
        c = work.pop(kappa)
        if abs(c) <= floor:
            continue
        out[kappa] = c
        for k, u in build_P(kappa, params).items():
            if k == kappa:
                continue
            work[k] = work.get(k, 0.0) - c * u
    return out


def lr_coefficients(lam, mu, params: ModelParams) -> dict[Partition, float]:
    """Structure coefficients of P_lam * P_mu in the eigenpolynomial basis.

    Keys are filtered at SUPPORT_CUT relative to the product scale and must
    obey the support constraints (both factors contained, weights additive);
    a sizable coefficient outside the support is a hard error.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    product = multiply_monomial(build_P(lam, params), build_P(mu, params))
    raw = expand_in_P(product, params)
    if not raw:
        return {}
    cut = SUPPORT_CUT * max(1.0, max(abs(v) for v in raw.values()))
    target = weight(lam) + weight(mu)
    out: dict[Partition, float] = {}
    for nu, v in raw.items():
        if abs(v) <= cut:
            continue
        if not (contains(lam, nu) and contains(mu, nu) and weight(nu) == target):
            raise ComputationError(
                f"support violation: key {nu} with coefficient {v!r} in {lam} * {mu}"
            )
        out[nu] = v
    return out
