import numpy as np
import pytest

from ellfusion.errors import NotAStrip
from ellfusion.kernel import trig_bracket
from ellfusion.oracles import (
    classical_fusion,
    kac_peterson_smatrix,
    macdonald_lr_p0,
    macdonald_pieri_p0,
    make_report,
    schur_eval,
    schur_in_elementary,
)
from ellfusion.partitions import contains, partitions_of_weight, weight


def test_schur_single_row_and_column():
    x = (1.0, 2.0, 3.0)
    assert schur_eval((1, 0, 0), x) == 6.0
    assert schur_eval((1, 1, 0), x) == 1 * 2 + 1 * 3 + 2 * 3
    assert schur_eval((1, 1, 1), x) == 6.0


def test_schur_tableau_count():
    assert schur_eval((2, 1, 0), (1.0, 1.0, 1.0)) == 8.0
    assert schur_eval((0, 0, 0), (1.0, 1.0, 1.0)) == 1.0
    # more rows than variables kills the column-strict condition
    assert schur_eval((1, 1, 1), (1.0, 1.0)) == 0.0


def test_schur_in_elementary_small_cases():
    assert schur_in_elementary((2, 0), 2) == {(2, 0): 1, (1, 1): -1}
    assert schur_in_elementary((2, 1, 0), 3) == {(2, 1, 0): 1, (1, 1, 1): -1}
    assert schur_in_elementary((0, 0), 2) == {(0, 0): 1}


def test_schur_in_elementary_consistent_with_tableaux():
    rng = np.random.default_rng(2)
    from ellfusion.polynomials import elementary_symmetric

    for mu in [(2, 1, 0), (3, 1, 0), (2, 2, 1), (3, 2, 1)]:
        x = tuple(rng.uniform(0.5, 2.0, 3) + 1j * rng.uniform(-1.0, 1.0, 3))
        es = elementary_symmetric(x)
        via_e = 0.0 + 0.0j
        for key, c in schur_in_elementary(mu, 3).items():
            term = complex(c)
            for j in range(3):
                exp = key[j] - (key[j + 1] if j < 2 else 0)
                term *= es[j] ** exp
            via_e += term
        direct = schur_eval(mu, x)
        assert abs(via_e - direct) < 1e-10 * max(1.0, abs(direct))


def test_trig_strip_weights():
    alpha, g = 2.0, 0.7
    assert macdonald_pieri_p0((1, 0), (2, 0), alpha, g) == 1.0
    want = (
        trig_bracket(2 * g, alpha)
        * trig_bracket(1.0, alpha)
        / (trig_bracket(g, alpha) * trig_bracket(1 + g, alpha))
    )
    got = macdonald_pieri_p0((1, 0), (1, 1), alpha, g)
    assert abs(got - want) < 1e-14
    with pytest.raises(NotAStrip):
        macdonald_pieri_p0((1, 0), (0, 1), alpha, g)


def test_kac_peterson_unitary_after_normalization():
    for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        labels, S = kac_peterson_smatrix(n, m)
        G = S @ S.conj().T
        scale = G[0, 0].real
        assert np.abs(G - scale * np.eye(len(labels))).max() < 1e-12 * scale


def test_classical_fusion_examples():
    assert classical_fusion((1, 0), (1, 0), 2, 1) == {(0, 0): 1}
    assert classical_fusion((1, 0), (1, 0), 2, 2) == {(0, 0): 1, (2, 0): 1}
    assert classical_fusion((0, 0), (1, 0), 2, 2) == {(1, 0): 1}
    got = classical_fusion((1, 0, 0), (1, 1, 0), 3, 2)
    assert got == {(0, 0, 0): 1, (2, 1, 0): 1}


def test_classical_fusion_ring_axioms():
    n, m = 3, 2
    from ellfusion.partitions import enumerate_level

    labels = enumerate_level(n, m)
    tables = {
        (lam, mu): classical_fusion(lam, mu, n, m) for lam in labels for mu in labels
    }
    for lam in labels:
        for mu in labels:
            assert tables[(lam, mu)] == tables[(mu, lam)]
            for kappa, v in tables[(lam, mu)].items():
                assert isinstance(v, int) and v >= 0
    zero = (0,) * n
    for mu in labels:
        assert tables[(zero, mu)] == {mu: 1}


def test_trig_structure_coefficients_support_and_symmetry():
    shapes = [mu for w in range(1, 4) for mu in partitions_of_weight(3, w)]
    for lam in shapes:
        for mu in shapes:
            a = macdonald_lr_p0(lam, mu, 2.0, 0.65)
            b = macdonald_lr_p0(mu, lam, 2.0, 0.65)
            assert set(a) == set(b)
            for k, v in a.items():
                assert contains(lam, k) and contains(mu, k)
                assert weight(k) == weight(lam) + weight(mu)
                assert abs(v - b[k]) < 1e-11


def test_make_report():
    good = make_report("demo", [(1.0, 1.0 + 1e-13)], tol=1e-9)
    assert good.passed and good.max_abs < 1e-12
    bad = make_report("demo", [(1.0, 2.0)], tol=1e-9)
    assert not bad.passed
