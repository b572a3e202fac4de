import math

import numpy as np

from ellfusion import coeffs
from ellfusion.kernel import ModelParams, realify, trig_bracket
from ellfusion.fusion import (
    fusion_pieri,
    fusion_table,
    reduce_mod_ideal,
    s_matrix,
    structure_constants_lr,
    structure_constants_projection,
    structure_constants_verlinde,
)
from ellfusion.oracles import kac_peterson_smatrix, macdonald_pieri_p0
from ellfusion.partitions import enumerate_level, span, underline, vertical_strips


def test_reduce_mod_ideal_examples():
    params = ModelParams.locked(2, 1, 0.7, 0.0)
    got = reduce_mod_ideal({(2, 0): 2.5, (1, 1): 1.5}, params)
    assert got == {(0, 0): 1.5}
    assert reduce_mod_ideal({}, params) == {}
    table = {(1, 0): 0.5, (0, 0): 1.25}
    assert reduce_mod_ideal(table, params) == table


def test_fusion_pieri_drops_boundary_strips():
    params = ModelParams.locked(2, 1, 0.8, 0.3)
    got = fusion_pieri((1, 0), 1, params)
    # the (2,0) strip leaves the level cone; only (1,1) -> (0,0) survives
    want = realify(coeffs.psi_prime((1, 0), (1, 1), params))
    assert set(got) == {(0, 0)}
    assert abs(got[(0, 0)] - want) < 1e-14


def test_two_site_fusion_at_general_coupling():
    for g in (0.7, 1.3):
        params = ModelParams.locked(2, 1, g, 0.3)
        got = structure_constants_verlinde((1, 0), (1, 0), params)
        want = realify(coeffs.psi_prime((1, 0), (1, 1), params))
        assert set(got) == {(0, 0)}
        assert abs(got[(0, 0)] - want) < 1e-9


def test_unit_element():
    params = ModelParams.locked(3, 2, 0.9, 0.2)
    sm = s_matrix(params)
    for mu in sm.labels:
        got = structure_constants_verlinde((0, 0, 0), mu, params, spectrum=sm.spectrum)
        for kappa in sm.labels:
            want = 1.0 if kappa == mu else 0.0
            assert abs(got.get(kappa, 0.0) - want) < 1e-10


def test_classical_su2_level2_point():
    params = ModelParams.locked(2, 2, 1.0, 0.0)
    got = structure_constants_verlinde((1, 0), (1, 0), params)
    assert set(got) == {(0, 0), (2, 0)}
    assert abs(got[(0, 0)] - 1.0) < 1e-10
    assert abs(got[(2, 0)] - 1.0) < 1e-10


def test_lr_route_agrees_with_spectral_route():
    for n, m in [(2, 2), (3, 2)]:
        for g, p in [(0.7, 0.4), (1.3, 0.0)]:
            params = ModelParams.locked(n, m, g, p)
            t_lr = fusion_table(params, route="lr")
            t_v = fusion_table(params, route="verlinde")
            assert t_lr.max_difference(t_v) < 1e-7
            assert not t_lr.flagged


def test_limit_protocol_at_resonant_coupling():
    params = ModelParams.locked(2, 1, 1.0, 0.0)
    got, flags = structure_constants_lr((1, 0), (1, 0), params, return_flags=True)
    assert not flags
    assert abs(got[(0, 0)] - 1.0) < 1e-8
    t_v = structure_constants_verlinde((1, 0), (1, 0), params)
    assert abs(got[(0, 0)] - t_v[(0, 0)]) < 1e-7


def test_projection_route_matches_spectral_sum():
    params = ModelParams.locked(3, 2, 0.7, 0.4)
    sm = s_matrix(params)
    for lam in sm.labels:
        for mu in sm.labels:
            a = structure_constants_verlinde(lam, mu, params, spectrum=sm.spectrum)
            b = structure_constants_projection(lam, mu, params, spectrum=sm.spectrum)
            for k in set(a) | set(b):
                assert abs(a.get(k, 0.0) - b.get(k, 0.0)) < 1e-8


def test_fusion_table_symmetry_and_support():
    params = ModelParams.locked(3, 2, 0.8, 0.3)
    table = fusion_table(params, route="verlinde")
    for lam in table.labels:
        for mu in table.labels:
            a = table.entries[(lam, mu)]
            b = table.entries[(mu, lam)]
            for k in set(a) | set(b):
                assert abs(a.get(k, 0.0) - b.get(k, 0.0)) < 1e-9
            assert all(kappa in table.labels for kappa in a)


def test_fusion_table_associativity():
    params = ModelParams.locked(2, 2, 0.8, 0.3)
    table = fusion_table(params, route="verlinde")
    labels = table.labels

    def N(lam, mu, kappa):
        return table.entries[(lam, mu)].get(kappa, 0.0)

    for a in labels:
        for b in labels:
            for c in labels:
                for d in labels:
                    left = sum(N(a, b, k) * N(k, c, d) for k in labels)
                    right = sum(N(b, c, k) * N(a, k, d) for k in labels)
                    assert abs(left - right) < 1e-8


def test_smatrix_first_row_and_identity():
    params = ModelParams.locked(3, 2, 0.7, 0.4)
    sm = s_matrix(params)
    for j, nu in enumerate(sm.labels):
        want = 1.0 / realify(coeffs.c_norm(nu, params))
        assert abs(sm.S[0, j] - want) < 1e-12 * abs(want)
    assert sm.identity_residual() < 1e-8
    assert sm.det_residual() < 1e-6


def test_smatrix_classical_point_matches_sine_oracle():
    for n, m in [(2, 1), (3, 2)]:
        params = ModelParams.locked(n, m, 1.0, 0.0)
        sm = s_matrix(params)
        labels, KP = kac_peterson_smatrix(n, m)
        assert list(labels) == list(sm.labels)
        assert np.abs(sm.S - KP).max() < 1e-8


def test_smatrix_gauge_factor_at_unit_coupling():
    # away from the trigonometric point the matrix differs per column by the
    # ratio of normalization coefficients only
    base = ModelParams.locked(3, 2, 1.0, 0.0)
    ell = ModelParams.locked(3, 2, 1.0, 0.45)
    sm0, smp = s_matrix(base), s_matrix(ell)
    ratio = np.array(
        [
            realify(coeffs.c_norm(nu, base)) / realify(coeffs.c_norm(nu, ell))
            for nu in sm0.labels
        ]
    )
    assert np.abs(smp.S - sm0.S * ratio[None, :]).max() < 1e-10


def test_normalization_closed_form_at_classical_point():
    for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        params = ModelParams.locked(n, m, 1.0, 0.0)
        sm = s_matrix(params)
        alpha = 2.0 * math.pi / (m + n)
        denom = 1.0
        for j in range(n):
            for k in range(j + 1, n):
                denom *= trig_bracket(k - j, alpha) ** 2
        closed = (
            (2.0 * math.sin(math.pi / (m + n))) ** (-n * (n - 1))
            * n
            * (n + m) ** (n - 1)
            / denom
        )
        assert abs(sm.normalization - closed) < 1e-8 * closed


def test_refined_pieri_at_trigonometric_point():
    params = ModelParams.locked(3, 2, 0.85, 0.0)
    for lam in enumerate_level(3, 2):
        for r in (1, 2):
            got = fusion_pieri(lam, r, params)
            want = {}
            for nu in vertical_strips(lam, r):
                if span(nu) <= 2:
                    want[underline(nu)] = macdonald_pieri_p0(lam, nu, params.alpha, params.g)
            assert set(got) == set(want)
            for k in want:
                assert abs(got[k] - want[k]) < 1e-12
