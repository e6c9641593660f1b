"""Smoke tests for the python module: one pass over every exposed surface."""

import math

import pytest

import tripod_eit as te


def test_version():
    assert te.__version__


def test_params_defaults_and_json_roundtrip():
    p = te.Params()
    assert p.g_c == 5.0 and p.beta == 0.666
    te.validate_params(p)
    q = te.params_from_json(te.params_to_json(p))
    assert q == p


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError, match="beta must be positive"):
        te.validate_params(te.Params(beta=0.0))


def test_tripod_hamiltonian_structure():
    p = te.Params(g_p=0.01, g_c=5.0, delta_c=5.0, Delta=5.0)
    H = te.build_tripod_h(p)
    assert H.shape == (4, 4)
    assert H[3, 3] == pytest.approx(10.0)
    assert H[0, 2] == pytest.approx(-2.5)
    assert abs(H - H.conj().T).max() == 0.0


def test_eigensystem_and_dark_states():
    p = te.Params(g_p=1.0, g_c=2.0, delta_c=5.0, Delta=5.0)
    es = te.eigensystem(te.build_tripod_h(p))
    assert sorted(v.real for v in es.values) == [v.real for v in es.values]
    dark = te.find_dark_states(es, 1e-8)
    assert len(dark) == 1
    assert abs(dark[0].eigenvalue) < 1e-10
    assert dark[0].coupling_amplitude == pytest.approx(1.0 / math.sqrt(5.0), rel=1e-9)


def test_closed_form_cubic():
    roots = te.closed_form_cubic_roots(te.Params(g_p=0.0, g_c=2.0, delta_c=0.0))
    assert sorted(r.real for r in roots) == pytest.approx([-1.0, 0.0, 1.0], abs=1e-12)
    p = te.Params(g_p=1.0, g_c=2.0, delta_c=0.5)
    for root in te.closed_form_cubic_roots(p):
        cf = te.closed_form_eigenvector(root.real, p)
        assert cf.residual_symmetric_frame < 1e-8


def test_single_window_kernel():
    assert te.h0(5.0, 5.0) == pytest.approx(1j)
    assert te.im_h0(3.0, 3.0) == 1.0
    assert te.h_two_lambda(0.0, 5.0, 5.0) == pytest.approx(1j)
    assert te.lambda_weak_probe(5.0, 5.0, 5.0) == 0.0


def test_full_response_components():
    r = te.h_full(te.Params(g_c=2.0, Delta=5.0, delta_c=3.0, alpha=0.001))
    assert r.value.imag > 0.0
    assert r.left != r.right


def test_steady_state_and_probe_response():
    p = te.Params(g_p=1e-3, g_c=5.0, delta_c=0.0, Delta=5.0, alpha=1e-4)
    H = te.drive_hamiltonian(p, te.SystemKind.TRIPOD)
    channels = te.collapse_channels(p, te.GroundRelaxation.EXCHANGE, te.SystemKind.TRIPOD)
    rho = te.steady_state(te.build_liouvillian(H, channels))
    assert rho.trace().real == pytest.approx(1.0, abs=1e-10)
    h = te.probe_response(p)
    assert h.imag == pytest.approx(1.0, abs=0.03)  # matched-point doubling


def test_evolve_matches_steady_state():
    p = te.Params(g_p=0.2, g_c=1.0, delta_c=0.5, Delta=1.0, alpha=0.5, beta=1.0)
    H = te.drive_hamiltonian(p, te.SystemKind.TRIPOD)
    channels = te.collapse_channels(p, te.GroundRelaxation.EXCHANGE, te.SystemKind.TRIPOD)
    rho_ss = te.steady_state(te.build_liouvillian(H, channels))
    import numpy as np

    rho0 = np.eye(4, dtype=complex) / 4.0
    rho_t = te.evolve(H, channels, rho0, 100.0, te.default_time_step(p))
    assert abs(rho_t - rho_ss).max() < 1e-6


def test_sweep_and_window_analysis():
    p = te.Params(g_c=2.0, Delta=5.0)
    s = te.sweep_delta_c(te.Evaluator.ANALYTIC_TWO_LAMBDA, p, -15.0, 15.0, 601)
    assert len(s.delta_c) == 601
    report = te.analyze_windows(s)
    assert report.regime == te.Regime.SEPARATED
    centers = [w.center for w in report.windows]
    assert centers == pytest.approx([-5.0, 5.0], abs=0.05)
    widths = [w.width for w in report.windows]
    assert widths == pytest.approx([4.0, 4.0], rel=0.05)


def test_scan_grid():
    g = te.scan_2d(
        te.Evaluator.ANALYTIC_TWO_LAMBDA,
        te.Params(Delta=5.0),
        te.ScanAxis.GC,
        1.0,
        3.0,
        3,
        -5.0,
        5.0,
        11,
    )
    assert g.absorption.shape == (3, 11)


def test_presets():
    assert te.figure_names() == ["fig2", "fig5", "fig6", "fig7", "fig8"]
    f = te.preset_for("fig7")
    assert f.panel_values == [0.0, 2.5, 5.0, 7.5]
    assert te.apply_panel_value(f, 2.5).Delta == 2.5
    with pytest.raises(ValueError):
        te.preset_for("fig9")


def test_bfield():
    assert te.bfield_gauss(10.0) == pytest.approx(7.145, abs=0.01)
    assert te.bfield_gauss(10.0, lande_g=2.0) == pytest.approx(3.572, abs=0.01)


def test_csv_roundtrip(tmp_path):
    p = te.Params(g_c=3.0, Delta=4.0)
    s = te.sweep_delta_c(te.Evaluator.ANALYTIC_FULL, p, -2.0, 2.0, 5)
    path = tmp_path / "s.csv"
    te.write_spectrum_csv(s, path)
    back = te.read_spectrum_csv(path)
    assert back.params == s.params
    assert back.h == pytest.approx(s.h, abs=1e-12)


def test_cli_through_python(tmp_path):
    rc = te.run_command(
        ["spectrum", "--gc", "2", "--points", "11", "--out", str(tmp_path)]
    )
    assert rc == 0
    assert (tmp_path / "spectrum.csv").exists()
    assert te.run_command(["spectrum", "--gc", "-1"]) == 2
