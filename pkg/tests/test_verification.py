import pytest

from ellfusion.verification import (
    check_fusion_g1_classical,
    check_gauge_identity,
    check_level_boundary,
    check_route_agreement,
    check_smatrix_kac_peterson,
    limits_suite,
    ring_suite,
    run_suite,
    spectrum_suite,
)


@pytest.mark.parametrize("n,m", [(2, 1), (2, 2), (3, 1)])
def test_limits_suite_passes(n, m):
    for report in limits_suite(n, m):
        assert report.passed, report


@pytest.mark.parametrize("n,m", [(2, 1), (3, 2)])
def test_ring_suite_passes(n, m):
    for report in ring_suite(n, m):
        assert report.passed, report


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_spectrum_suite_passes(n, m):
    for report in spectrum_suite(n, m):
        assert report.passed, report


def test_individual_checks_report_structure():
    r = check_gauge_identity(2, 1, g_values=(0.7,), p_values=(0.3,))
    assert r.passed and r.max_abs >= 0.0 and r.max_rel >= 0.0
    assert check_level_boundary(3, 1).passed
    assert check_route_agreement(2, 1).passed
    assert check_smatrix_kac_peterson(2, 2).passed
    assert check_fusion_g1_classical(3, 1).passed


def test_run_suite_dispatch():
    assert run_suite("limits", 2, 1)
    with pytest.raises(ValueError):
        run_suite("bogus", 2, 1)
