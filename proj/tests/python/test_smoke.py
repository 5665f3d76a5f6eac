import math

import numpy as np
import pytest

import z2mem


def test_version():
    assert z2mem.__version__ == "1.0.0"


def test_ground_state_and_vcm():
    h = z2mem.build_tfim(8, 0.5)
    pairs = z2mem.lowest_eigenpairs(h, 2)
    assert pairs.eigenvalues[0] == pytest.approx(-8.509082235140284, abs=1e-10)
    assert pairs.eigenvalues[1] == pytest.approx(-8.507626387639508, abs=1e-10)
    assert pairs.parities[0] * pairs.parities[1] < 0
    vcm = z2mem.build_vcm(pairs.eigenvectors[0])
    assert vcm.entries.shape == (24, 24)
    assert vcm.e1 == pytest.approx(7.526620426223774, rel=1e-9)


def test_state_vector_round_trip():
    amps = np.zeros(8, dtype=complex)
    amps[0] = amps[7] = 1 / math.sqrt(2)
    s = z2mem.StateVector(3, amps)
    np.testing.assert_allclose(s.amplitudes, amps)
    assert z2mem.build_vcm(s).e1 == pytest.approx(3.0)
    assert z2mem.magnetization_z(z2mem.StateVector.basis(3, 0)) == pytest.approx(3.0)


def test_mz_distribution_symmetry():
    e0 = z2mem.lowest_eigenpairs(z2mem.build_tfim(9, 0.5), 1).eigenvectors[0]
    d = z2mem.mz_distribution(e0)
    assert d.asymmetry() < 1e-10
    assert sum(d.probabilities) == pytest.approx(1.0)


def test_gap_scan_and_fit():
    gaps = z2mem.gap_scan(0.5, 4, 8)
    fit = z2mem.fit_scaling([g.n for g in gaps], [g.gap for g in gaps], z2mem.FitModel.Exponential)
    assert fit.slope < -0.3


def test_thermal_w_matrix():
    g = z2mem.gibbs_state(z2mem.build_tfim(4, 0.5), 0.5)
    assert np.trace(g.rho).real == pytest.approx(1.0)
    w = z2mem.build_w_matrix(g)
    assert w.eigenvalues.min() > -1e-8


def test_rvb_checks_report():
    names = {c.name: c.passed for c in z2mem.rvb_identity_checks(6)}
    assert names["vb_overlap"] and names["total_spin_residual"]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        z2mem.build_tfim(2, 0.5)
    with pytest.raises(RuntimeError):
        z2mem.full_spectrum(z2mem.build_tfim(11, 0.5))


def test_cli_in_process():
    code, out, err = z2mem.run_cli(["gap", "--n-min", "4", "--n-max", "5"])
    assert code == 0
    assert "scan_kind,n,lambda,kT,E0,E1,gap" in out
