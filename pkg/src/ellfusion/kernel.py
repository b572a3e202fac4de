"""Scaled theta kernel, elliptic factorial, and model parameters.

The basic building block is the bracket

    [z] = theta1(alpha*z/2; p) / ((alpha/2) * theta1'(0; p)),

an odd entire function of z whose zeros sit on (2*pi/alpha) * Z.  The nome
lives in (-1, 1); at p = 0 the bracket degenerates to (2/alpha)*sin(alpha*z/2).
The common branch factor p^(1/4) of theta1 and theta1' cancels in the ratio,
so the bracket is evaluated from the reduced series

    S(w, p)  = sum_{l>=0} (-1)^l p^(l(l+1)) sin((2l+1) w),
    S'(0, p) = sum_{l>=0} (-1)^l (2l+1) p^(l(l+1)),

which stay real for real inputs and are analytic across p = 0.  All
evaluators here are stateless and safe to call concurrently.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ComputationError, GenericityViolation, NonConvergent, SingularDenominator

TRUNCATION_RTOL = 1e-16
SINGULAR_TOL = 1e-12
GENERICITY_TOL = 1e-8
IMAG_TOL = 1e-11
DEFAULT_GATE_WINDOW = 12
_MAX_TERMS = 600
_TWO_PI = 2.0 * math.pi


def _check_nome(p: float) -> None:
    if not abs(p) < 1.0:
        raise NonConvergent(f"nome p={p!r} must satisfy |p| < 1")


_MP_NOME_THRESHOLD = 0.75
_MP_GUARD_DPS = 50


def _sine_series_mp(w: complex, p: float, digits: int) -> complex:
    """Extended-precision reduced sine series, rounded back to binary64."""
    import mpmath

    with mpmath.workdps(digits):
        wv = mpmath.mpc(w)
        pv = mpmath.mpf(p)
        total = mpmath.mpc(0)
        power = mpmath.mpf(1)
        cutoff = mpmath.mpf(10) ** (-digits)
        small = 0
        for l in range(_MAX_TERMS):
            term = (-1) ** (l % 2) * power * mpmath.sin((2 * l + 1) * wv)
            total += term
            if abs(term) <= cutoff * max(abs(total), mpmath.mpf(10) ** -300):
                small += 1
                if small >= 2:
                    return complex(total)
            else:
                small = 0
            power *= pv ** (2 * (l + 1))
    raise NonConvergent(f"theta series did not converge for p={p!r}")


def _derivative_series0_mp(p: float, digits: int) -> float:
    import mpmath

    with mpmath.workdps(digits):
        pv = mpmath.mpf(p)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        cutoff = mpmath.mpf(10) ** (-digits)
        small = 0
        for l in range(_MAX_TERMS):
            term = (-1) ** (l % 2) * (2 * l + 1) * power
            total += term
            if abs(term) <= cutoff * max(abs(total), mpmath.mpf(10) ** -300):
                small += 1
                if small >= 2:
                    return float(total)
            else:
                small = 0
            power *= pv ** (2 * (l + 1))
    raise NonConvergent(f"theta derivative series did not converge for p={p!r}")


def _sine_series(w: complex, p: float, rtol: float = TRUNCATION_RTOL) -> complex:
    """sum_{l>=0} (-1)^l p^(l(l+1)) sin((2l+1) w), truncated adaptively.

    Terms are added until two consecutive terms fall below rtol relative to
    the running sum; l(l+1) is always even, so negative nomes need no
    special casing.  Large nomes cancel catastrophically in binary64, so
    |p| >= 0.75 is summed with extended-precision guard digits.
    """
    if abs(p) >= _MP_NOME_THRESHOLD:
        return _sine_series_mp(w, p, _MP_GUARD_DPS)
    total = 0.0 + 0.0j
    power = 1.0  # p^(l(l+1))
    small = 0
    for l in range(_MAX_TERMS):
        term = (-1) ** (l % 2) * power * cmath.sin((2 * l + 1) * w)
        total += term
        if abs(term) <= rtol * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        power *= p ** (2 * (l + 1))
    raise NonConvergent(f"theta series did not converge for p={p!r}")


def _derivative_series0(p: float, rtol: float = TRUNCATION_RTOL) -> float:
    """sum_{l>=0} (-1)^l (2l+1) p^(l(l+1)); never vanishes on |p| < 1."""
    if abs(p) >= _MP_NOME_THRESHOLD:
        return _derivative_series0_mp(p, _MP_GUARD_DPS)
    total = 0.0
    power = 1.0
    small = 0
    for l in range(_MAX_TERMS):
        term = (-1) ** (l % 2) * (2 * l + 1) * power
        total += term
        if abs(term) <= rtol * max(abs(total), 1e-300):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        power *= p ** (2 * (l + 1))
    raise NonConvergent(f"theta derivative series did not converge for p={p!r}")


def theta1(z, p: float, rtol: float = TRUNCATION_RTOL) -> complex:
    """Odd Jacobi theta function 2*sum_{l>=0} (-1)^l p^((l+1/2)^2) sin((2l+1)z).

    For negative nomes the common factor p^(1/4) is taken on the principal
    branch; it cancels in every bracket ratio downstream.
    """
    _check_nome(p)
    quarter = complex(p) ** 0.25
    return 2.0 * quarter * _sine_series(complex(z), float(p), rtol)


def theta1_product(z, p: float) -> complex:
    """Product form 2 p^(1/4) sin(z) prod_{l>=1} (1-p^2l)(1-2 p^2l cos(2z)+p^4l)."""
    _check_nome(p)
    quarter = complex(p) ** 0.25
    out = 2.0 * quarter * cmath.sin(complex(z))
    p2l = 1.0
    for _ in range(1, _MAX_TERMS):
        p2l *= p * p
        if abs(p2l) < 5e-17:
            break
        out *= (1.0 - p2l) * (1.0 - 2.0 * p2l * cmath.cos(2.0 * complex(z)) + p2l * p2l)
    return out


def theta1_prime0(p: float) -> complex:
    """theta1'(0; p) from the term-wise differentiated sine series."""
    _check_nome(p)
    quarter = complex(p) ** 0.25
    return 2.0 * quarter * _derivative_series0(float(p))


@lru_cache(maxsize=1_000_000)
def _bracket_cached(z: complex, alpha: float, p: float) -> complex:
    num = _sine_series(alpha * z / 2.0, p)
    den = (alpha / 2.0) * _derivative_series0(p)
    return num / den


def _bracket_mp(z: complex, alpha: float, p: float, digits: int) -> complex:
    """Extended-precision bracket via mpmath; result is rounded to binary64."""
    num = _sine_series_mp(alpha * z / 2.0, p, digits)
    den = (alpha / 2.0) * _derivative_series0_mp(p, digits)
    return num / den


def qpow(alpha: float, x: float) -> complex:
    """q^x for q = exp(i*alpha), kept on the ray exp(i*alpha*x)."""
    return cmath.exp(1j * alpha * x)


def realify(value: complex, tol: float = IMAG_TOL) -> float:
    """Convert a complex value that must be real; rejects large residues."""
    value = complex(value)
    if abs(value.imag) > tol * max(1.0, abs(value.real)):
        raise ComputationError(f"unexpected imaginary residue in {value!r}")
    return float(value.real)


@lru_cache(maxsize=4096)
def g_regularity_margin(alpha: float, g: float, n: int, window: int, jmax: int | None = None) -> float:
    """Distance of the nearest denominator bracket from a zero of [.].

    Denominator arguments downstream are of the form x + j*g with integer
    0 <= x <= window and 1 <= j <= jmax, while the zeros of the bracket sit
    on (2*pi/alpha) * Z.  The returned margin is the minimum distance
    between those two sets.  jmax defaults to n (the full regularity
    condition); recurrence denominators only reach j = n - 1, since the
    combination m + n*g is pinned to a zero by the level lock and occurs in
    numerators and normalizations only.
    """
    period = _TWO_PI / alpha
    worst = math.inf
    top = n if jmax is None else jmax
    for j in range(1, top + 1):
        for x in range(window + 1):
            zv = x + j * g
            dist = abs(zv - period * round(zv / period))
            if dist < worst:
                worst = dist
    return worst


def _check_precision(precision: str) -> None:
    if precision == "double":
        return
    if precision.startswith("mp"):
        try:
            digits = int(precision[2:])
        except ValueError:
            digits = 0
        if digits >= 16:
            return
    raise ValueError(f"precision must be 'double' or 'mp<digits>', got {precision!r}")


@dataclass(frozen=True)
class ModelParams:
    """Model parameters (n, m, g, p) with the phase scale alpha.

    Level-locked mode ties alpha = 2*pi/(m + n*g), which places the bracket
    zero [m + n*g] = 0 that truncates everything to the level-m cone.  Free
    mode takes alpha directly and requires the coupling to clear the
    genericity gate.  Instances are immutable and hashable; they double as
    memoization keys everywhere downstream.
    """

    n: int
    m: int
    g: float
    p: float
    alpha: float
    level_locked: bool = True
    precision: str = "double"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < 0:
            raise ValueError("m must be >= 0")
        _check_nome(self.p)
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        if self.level_locked:
            if not self.g > 0:
                raise ValueError("level-locked mode requires g > 0")
            if abs(self.alpha * (self.m + self.n * self.g) - _TWO_PI) > 1e-14 * _TWO_PI:
                raise ValueError("alpha is not locked to 2*pi/(m + n*g)")
        _check_precision(self.precision)

    @classmethod
    def locked(cls, n: int, m: int, g: float, p: float, precision: str = "double") -> "ModelParams":
        """Level-locked constructor: alpha = 2*pi/(m + n*g)."""
        alpha = _TWO_PI / (m + n * float(g))
        return cls(n, m, float(g), float(p), alpha, True, precision)

    @classmethod
    def free(
        cls,
        n: int,
        g: float,
        p: float,
        alpha: float,
        m: int = 0,
        precision: str = "double",
        gate_window: int = DEFAULT_GATE_WINDOW,
    ) -> "ModelParams":
        """Free constructor: explicit alpha, rejected near coupling resonances."""
        margin = g_regularity_margin(float(alpha), float(g), n, gate_window)
        if margin < GENERICITY_TOL:
            raise GenericityViolation(
                f"coupling g={g} is within {margin:.2e} of a resonance for alpha={alpha}"
            )
        return cls(n, m, float(g), float(p), float(alpha), False, precision)

    @property
    def q(self) -> complex:
        """Degeneration parameter q = exp(i*alpha)."""
        return cmath.exp(1j * self.alpha)

    def with_p(self, p: float) -> "ModelParams":
        return dataclasses.replace(self, p=float(p))

    def with_g_locked(self, g: float) -> "ModelParams":
        """Re-locked copy at a new coupling (alpha follows the lock)."""
        if not self.level_locked:
            raise ValueError("with_g_locked only applies to level-locked parameters")
        return ModelParams.locked(self.n, self.m, g, self.p, self.precision)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "g": self.g,
            "p": self.p,
            "alpha": self.alpha,
            "level_locked": self.level_locked,
            "precision": self.precision,
        }


def bracket(z, params: ModelParams) -> complex:
    """Scaled theta bracket [z] = theta1(alpha*z/2; p)/((alpha/2) theta1'(0; p)).

    Evaluated from the reduced series so the branch factor p^(1/4) cancels
    exactly; at p = 0 this equals (2/alpha)*sin(alpha*z/2).
    """
    _check_nome(params.p)
    if params.precision != "double":
        return _bracket_mp(complex(z), params.alpha, params.p, int(params.precision[2:]))
    return _bracket_cached(complex(z), params.alpha, params.p)


def elliptic_factorial(z, k: int, params: ModelParams) -> complex:
    """Ascending product [z][z+1]...[z+k-1]; the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("factorial length k must be >= 0")
    out = 1.0 + 0.0j
    for l in range(k):
        out *= bracket(z + l, params)
    return out


def trig_bracket(z: float, alpha: float) -> float:
    """Trigonometric bracket sin(alpha*z/2)/sin(alpha/2)."""
    den = math.sin(alpha / 2.0)
    if abs(den) < 1e-15:
        raise SingularDenominator(f"sin(alpha/2) vanishes for alpha={alpha!r}")
    return math.sin(alpha * z / 2.0) / den


def trig_factorial(z: float, k: int, alpha: float) -> float:
    """Ascending product of trigonometric brackets [z]_q [z+1]_q ... [z+k-1]_q."""
    if k < 0:
        raise ValueError("factorial length k must be >= 0")
    out = 1.0
    for l in range(k):
        out *= trig_bracket(z + l, alpha)
    return out
