import math

import numpy as np
import pytest

import spinsync as ss

TWO_PI = 2 * math.pi


def fig2_drive(delta_b_mhz=0.4, alpha=0.0):
    d = ss.DriveConfig()
    d.omega_plus1 = TWO_PI * 9.5
    d.omega_minus1 = TWO_PI * 9.5
    d.omega_0 = TWO_PI * 1.0
    d.omega_prime = TWO_PI * 3.0
    d.phi_plus1 = alpha / 2
    d.phi_minus1 = alpha / 2
    d.delta_b = TWO_PI * delta_b_mhz
    d.delta_b_prime = ss.default_delta_b_prime(d.delta_b)
    return d


def test_effective_parameters_reference_values():
    p = ss.effective_parameters(fig2_drive(0.4))
    assert abs(p.delta_eff) / TWO_PI == pytest.approx(1.437, abs=1e-3)
    assert p.gamma_control / TWO_PI == pytest.approx(4.875, abs=1e-3)
    assert p.gamma_probe / TWO_PI == pytest.approx(0.055, abs=1e-3)
    assert p.gamma_decay / TWO_PI == pytest.approx(0.776, abs=1e-3)


def test_steady_state_and_sync_measure():
    model = ss.build_effective_model(fig2_drive())
    result = ss.steady_state(ss.liouvillian(model.h_eff, model.lindblad))
    assert result.unique
    assert np.isclose(np.trace(result.rho), 1.0)
    sq = ss.sync_measure(result.rho)
    assert sq == pytest.approx(0.106, abs=0.005)

    closed = ss.closed_form_sq(model.params, "eq20")
    assert sq == pytest.approx(closed, rel=0.05)


def test_full_model_ground_block_matches_effective_sq():
    drive = fig2_drive()
    h = ss.build_full_hamiltonian(drive)
    assert h.shape == (6, 6)
    full = ss.steady_state(ss.liouvillian(h, ss.full_lindblad_terms()))
    sq_full = ss.sync_measure(ss.ground_block(full.rho))
    model = ss.build_effective_model(drive)
    eff = ss.steady_state(ss.liouvillian(model.h_eff, model.lindblad))
    assert sq_full == pytest.approx(ss.sync_measure(eff.rho), abs=0.005)


def test_evolve_against_analytic_oracle():
    drive = ss.DriveConfig()
    drive.omega_prime = TWO_PI * 3.0
    drive.delta_b = TWO_PI * 0.4
    drive.delta_b_prime = ss.default_delta_b_prime(drive.delta_b)
    model = ss.build_effective_model(drive)
    liouville = ss.liouvillian(model.h_eff, model.lindblad)

    rho0 = np.zeros((3, 3), dtype=complex)
    rho0[0, 0] = 1.0
    grid = [0.0, 0.1, 0.5]
    trajectory = ss.evolve(liouville, rho0, grid)

    params = ss.OracleParams()
    params.omega_prime = drive.omega_prime
    params.delta_b = drive.delta_b
    params.delta_b_prime = drive.delta_b_prime
    for t, rho in zip(grid, trajectory):
        analytic = ss.case_iii_solution(rho0, t, params)
        assert np.max(np.abs(rho - analytic)) < 1e-8


def test_husimi_field_normalization_and_peak():
    model = ss.build_effective_model(fig2_drive())
    rho = ss.steady_state(ss.liouvillian(model.h_eff, model.lindblad)).rho
    field = ss.husimi_q(rho)
    assert field.normalization() == pytest.approx(1.0, abs=1e-6)
    peak = ss.husimi_max(field)
    assert peak.phase_preference
    assert peak.theta == pytest.approx(math.pi / 2, abs=0.05)
    assert peak.phi == pytest.approx(0.815 * math.pi, abs=0.02 * math.pi)


def test_acceptance_rows():
    rows = ss.run_acceptance()
    assert len(rows) == 11
    ids = [row[0] for row in rows]
    assert ids == list(range(1, 12))
