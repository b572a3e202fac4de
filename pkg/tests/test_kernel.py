import cmath
import math

import pytest

from ellfusion.errors import GenericityViolation, NonConvergent, SingularDenominator
from ellfusion.kernel import (
    ModelParams,
    bracket,
    elliptic_factorial,
    g_regularity_margin,
    theta1,
    theta1_prime0,
    theta1_product,
    trig_bracket,
    trig_factorial,
)


def test_theta1_vanishes_at_lattice_points():
    for p in (0.0, 0.1, 0.3, -0.4):
        assert abs(theta1(0.0, p)) < 1e-12
    assert abs(theta1(math.pi, 0.3)) < 1e-12


def test_theta1_series_matches_product():
    got = theta1(math.pi / 2, 0.1)
    want = theta1_product(math.pi / 2, 0.1)
    assert abs(got - want) <= 1e-12 * abs(want)


@pytest.mark.parametrize("p", [0.05, 0.3, 0.6, 0.9, -0.3, -0.9])
@pytest.mark.parametrize("z", [0.3, 1.1, 2.7, 0.4 + 0.3j])
def test_theta1_series_product_sweep(p, z):
    got = theta1(z, p)
    want = theta1_product(z, p)
    assert abs(got - want) <= 1e-12 * max(abs(want), 1e-30)


def test_theta1_rejects_bad_nome():
    with pytest.raises(NonConvergent):
        theta1(1.0, 1.0)
    with pytest.raises(NonConvergent):
        theta1(1.0, -1.2)


def test_theta1_prime0_positive_and_consistent():
    # finite difference of the series against the term-wise derivative
    for p in (0.0, 0.2, 0.5):
        h = 1e-6
        fd = (theta1(h, p) - theta1(-h, p)) / (2 * h)
        assert abs(fd - theta1_prime0(p)) < 1e-8 * max(1.0, abs(theta1_prime0(p)))


def test_bracket_trigonometric_limit():
    params = ModelParams.locked(2, 1, 0.7, 0.0)
    for z in (-2.2, -0.4, 0.3, 1.0, 2.9):
        want = (2.0 / params.alpha) * math.sin(params.alpha * z / 2.0)
        assert abs(bracket(z, params) - want) < 1e-14


def test_bracket_odd_and_zero_at_origin():
    for p in (-0.5, 0.0, 0.5):
        params = ModelParams.locked(2, 1, 0.7, p)
        assert bracket(0.0, params) == 0.0
        for k in range(1, 26):
            z = -5.0 + 10.0 * k / 26.0
            a, b = bracket(-z, params), bracket(z, params)
            assert abs(a + b) <= 1e-12 * max(abs(b), 1e-30)


def test_bracket_quasi_periodicity():
    for p in (-0.5, 0.0, 0.5):
        params = ModelParams.locked(2, 1, 0.7, p)
        period = 2.0 * math.pi / params.alpha
        for z in (0.3, 1.1, 2.6, -0.8):
            lhs = bracket(z + period, params)
            rhs = -bracket(z, params)
            assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1e-30)


def test_bracket_zero_at_period():
    params = ModelParams.locked(2, 1, 0.7, 0.25)
    z0 = 2.0 * math.pi / params.alpha
    assert abs(bracket(z0, params)) < 1e-12


def test_bracket_positive_inside_fundamental_window():
    for p in (-0.8, -0.3, 0.0, 0.3, 0.8):
        params = ModelParams.locked(2, 1, 0.7, p)
        period = 2.0 * math.pi / params.alpha
        for k in range(1, 40):
            z = period * k / 40.0
            v = bracket(z, params)
            assert abs(v.imag) < 1e-12
            assert v.real > 0.0


def test_elliptic_factorial():
    params = ModelParams.locked(2, 1, 0.7, 0.2)
    g = params.g
    assert elliptic_factorial(1.3, 0, params) == 1.0
    assert elliptic_factorial(1.0, 1, params) == bracket(1.0, params)
    want = bracket(g, params) * bracket(g + 1, params)
    assert abs(elliptic_factorial(g, 2, params) - want) < 1e-14 * abs(want)


def test_trig_bracket_examples():
    assert trig_bracket(1.0, 1.3) == 1.0
    assert trig_bracket(0.0, 1.3) == 0.0
    assert abs(trig_bracket(2.0, math.pi / 3) - math.sqrt(3.0)) < 1e-14
    with pytest.raises(SingularDenominator):
        trig_bracket(1.0, 2.0 * math.pi)
    assert trig_factorial(0.5, 2, 1.1) == trig_bracket(0.5, 1.1) * trig_bracket(1.5, 1.1)


def test_model_params_level_lock():
    params = ModelParams.locked(3, 2, 0.6, 0.1)
    assert abs(params.alpha * (2 + 3 * 0.6) - 2 * math.pi) <= 1e-14 * 2 * math.pi
    assert params.level_locked
    assert abs(params.q - cmath.exp(1j * params.alpha)) == 0.0
    bumped = params.with_p(0.4)
    assert bumped.p == 0.4 and bumped.alpha == params.alpha


def test_model_params_validation():
    with pytest.raises(NonConvergent):
        ModelParams.locked(2, 1, 0.7, 1.5)
    with pytest.raises(ValueError):
        ModelParams.locked(2, 1, -0.7, 0.0)
    with pytest.raises(ValueError):
        ModelParams(2, 1, 0.7, 0.0, alpha=1.0, level_locked=True)


def test_free_mode_gate_rejects_resonance():
    # 2*pi/alpha = 3 makes [3] = [period] a denominator zero at g = 1
    with pytest.raises(GenericityViolation):
        ModelParams.free(2, g=1.0, p=0.0, alpha=2.0 * math.pi / 3.0)
    # an incommensurate phase scale passes
    ModelParams.free(2, g=1.0, p=0.0, alpha=2.0)


def test_regularity_margin():
    assert g_regularity_margin(2.0 * math.pi / 3.0, 1.0, 2, 6) < 1e-12
    assert g_regularity_margin(2.0, 1.0, 2, 6) > 0.1
    # the boundary combination m + n*g is excluded for jmax = n - 1
    params = ModelParams.locked(3, 2, 0.7, 0.0)
    assert g_regularity_margin(params.alpha, 0.7, 3, 8, jmax=2) > 1e-2
    assert g_regularity_margin(params.alpha, 0.7, 3, 8, jmax=3) < 1e-12


def test_extended_precision_backend_matches_double():
    base = ModelParams.locked(2, 1, 0.7, 0.35)
    wide = ModelParams.locked(2, 1, 0.7, 0.35, precision="mp40")
    for z in (0.3, 1.4, 2.2):
        a, b = bracket(z, base), bracket(z, wide)
        assert abs(a - b) < 1e-13 * max(1.0, abs(a))
    with pytest.raises(ValueError):
        ModelParams.locked(2, 1, 0.7, 0.0, precision="single")
