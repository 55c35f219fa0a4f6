"""
Tests for the closed-form amplitudes and trajectory sampling.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings

from rarr_sim.dynamics import (
    TRAJECTORY_COLUMNS,
    raman_resonance_amplitudes,
    sample_trajectory,
    solve_single_mode,
    solve_two_mode,
)
from rarr_sim.dynamics.single_mode import PRINTED, RESIDUE
from rarr_sim.errors import DegenerateSpectrumError, ParameterError
from rarr_sim.models import SingleModeParams, SystemParams
from rarr_sim.oracle import OdeSystem, integrate

from .strategies import two_mode_params

RABI = math.sqrt(1.01)


class TestSolveTwoMode:
    """Tests for the residue solution of the two-mode system."""

    def test_raman_resonance_closed_form(self):
        """Test cos / sin dynamics at delta_omega = 0."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        t = np.linspace(0.0, 50.0, 501)
        amp = solution.amplitudes(t)
        np.testing.assert_allclose(amp[0], np.cos(RABI * t), atol=1e-10)
        np.testing.assert_allclose(amp[1], -1j / RABI * np.sin(RABI * t), atol=1e-10)
        np.testing.assert_allclose(amp[2], -0.1j / RABI * np.sin(RABI * t), atol=1e-10)

    def test_matches_raman_resonance_helper(self):
        """Test agreement with the dedicated resonance formula."""
        params = SystemParams(g_a=1.2, g_b=0.3)
        t = np.linspace(0.0, 20.0, 201)
        np.testing.assert_allclose(
            solve_two_mode(params).amplitudes(t), raman_resonance_amplitudes(params, t), atol=1e-10
        )

    def test_raman_helper_requires_resonance(self):
        """Test that the resonance formula refuses detuned or lossy input."""
        with pytest.raises(ParameterError):
            raman_resonance_amplitudes(SystemParams(g_a=1.0, g_b=0.1, delta_omega=0.2), [0.0])
        with pytest.raises(ParameterError):
            raman_resonance_amplitudes(SystemParams(g_a=1.0, g_b=0.1, kappa=0.1), [0.0])

    def test_decoupled_b_mode(self):
        """Test that g_b = 0 leaves C_F at zero and reduces to one mode."""
        solution = solve_two_mode(SystemParams(g_a=1.0, delta_omega=0.5))
        t = np.linspace(0.0, 30.0, 301)
        amp = solution.amplitudes(t)
        assert np.all(amp[2] == 0)
        np.testing.assert_allclose(amp[0], np.cos(t), atol=1e-10)
        np.testing.assert_allclose(amp[1], -1j * np.sin(t), atol=1e-10)

    def test_initial_conditions(self):
        """Test that the residues sum to the initial state |E>."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1, delta_omega=1.0, gamma=0.05, kappa=0.07))
        np.testing.assert_allclose(solution.residues.sum(axis=1), [1, 0, 0], atol=1e-10)

    def test_lossless_prefactors(self):
        """Test the lossless residues against the printed prefactor formulas."""
        params = SystemParams(g_a=1.0, g_b=0.1, delta_omega=0.8)
        solution = solve_two_mode(params)
        lam = solution.lambdas
        dw = params.delta_omega
        denominator = params.g_a ** 2 + params.g_b ** 2 + (3 * lam - 2j * dw) * lam
        np.testing.assert_allclose(solution.residues_E, (lam - 1j * dw) * lam / denominator, rtol=1e-10)
        np.testing.assert_allclose(solution.residues_F, -1j * params.g_b * lam / denominator, rtol=1e-10)
        np.testing.assert_allclose(
            solution.residues_G, -1j * params.g_a * (lam - 1j * dw) / denominator, rtol=1e-10
        )

    def test_denominator_is_cubic_derivative(self):
        """Test D_n = p'(lambda_n) for the lossless cubic."""
        from rarr_sim.eigen import characteristic_cubic

        params = SystemParams(g_a=1.0, g_b=0.2, delta_omega=-0.6)
        coeffs = characteristic_cubic(params)
        lam = solve_two_mode(params).lambdas
        denominator = params.g_a ** 2 + params.g_b ** 2 + (3 * lam - 2j * params.delta_omega) * lam
        np.testing.assert_allclose(coeffs.derivative(lam), denominator, rtol=1e-10)

    def test_degenerate_spectrum(self):
        """Test that an exact crossing is refused."""
        with pytest.raises(DegenerateSpectrumError, match="degenerate spectrum"):
            solve_two_mode(SystemParams(g_a=1.0, delta_omega=1.0))

    def test_lossy_matches_oracle(self):
        """Test the detuned lossy case against the integrator over t in [0, 100]."""
        params = SystemParams(g_a=1.0, g_b=0.1, delta_omega=1.0, gamma=0.05, kappa=0.07)
        t = np.linspace(0.0, 100.0, 2001)
        reference = integrate(OdeSystem.from_two_mode(params), 100.0, tolerance=1e-10)(t)
        assert np.abs(solve_two_mode(params).amplitudes(t) - reference).max() < 1e-8


class TestSolveSingleMode:
    """Tests for the one-mode closed form."""

    def test_lossless_resonant(self):
        """Test full vacuum Rabi oscillation."""
        solution = solve_single_mode(SingleModeParams(g_a=1.0))
        t = np.linspace(0.0, 20.0, 201)
        np.testing.assert_allclose(solution.c_e(t), np.cos(t), atol=1e-12)
        np.testing.assert_allclose(solution.c_g(t), -1j * np.sin(t), atol=1e-12)
        assert solution.convention == PRINTED

    def test_damped_resonant(self):
        """Test the complex Rabi frequency and the decaying envelope."""
        params = SingleModeParams(g_a=1.0, gamma=0.05, kappa=0.07)
        solution = solve_single_mode(params)
        assert solution.convention == PRINTED
        assert solution.rabi_frequency.real == pytest.approx(math.sqrt(1 - (0.02 / 4) ** 2), rel=1e-12)
        assert solution.rabi_frequency.real == pytest.approx(0.9999875, abs=1e-7)
        # envelope of the total population at whole Rabi periods
        periods = 2 * math.pi / solution.rabi_frequency.real * np.arange(1, 6)
        total = np.abs(solution.amplitudes(periods)) ** 2
        np.testing.assert_allclose(total.sum(axis=0), np.exp(-0.06 * periods), rtol=2e-2)

    def test_detuned_falls_back_when_needed(self):
        """Test that the detuned case carries a recorded convention and conforms."""
        params = SingleModeParams(g_a=1.0, delta_omega_a=0.3, gamma=0.02, kappa=0.1)
        solution = solve_single_mode(params)
        assert solution.convention in (PRINTED, RESIDUE)
        assert solution.note
        amp0 = solution.amplitudes([0.0])[:, 0]
        np.testing.assert_allclose(amp0, [1, 0], atol=1e-10)

    def test_detuned_matches_oracle(self):
        """Test the detuned lossy case against the integrator."""
        params = SingleModeParams(g_a=1.0, delta_omega_a=0.3, gamma=0.02, kappa=0.1)
        t = np.linspace(0.0, 100.0, 2001)
        reference = integrate(OdeSystem.from_single_mode(params), 100.0, tolerance=1e-10)(t)
        assert np.abs(solve_single_mode(params).amplitudes(t) - reference).max() < 1e-8

    def test_critical_damping(self):
        """Test that a vanishing Rabi frequency is refused."""
        with pytest.raises(DegenerateSpectrumError, match="2x2"):
            solve_single_mode(SingleModeParams(g_a=0.25, kappa=1.0))


class TestSampleTrajectory:
    """Tests for sample_trajectory."""

    def test_initial_state(self):
        """Test occupations at t = 0."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1, delta_omega=0.4, gamma=0.1, kappa=0.1))
        sample = sample_trajectory(solution, [0.0])[0]
        assert sample.occ_E == pytest.approx(1.0, abs=1e-12)
        assert sample.occ_G == pytest.approx(0.0, abs=1e-12)
        assert sample.occ_F == pytest.approx(0.0, abs=1e-12)
        assert sample.norm == pytest.approx(1.0, abs=1e-12)

    def test_quarter_period(self):
        """Test the populations after a quarter Rabi period at Raman resonance."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        sample = sample_trajectory(solution, [math.pi / (2 * RABI)])[0]
        assert sample.occ_E == pytest.approx(0.0, abs=1e-12)
        assert sample.occ_G == pytest.approx(1.0 / 1.01, rel=1e-10)
        assert sample.occ_F == pytest.approx(0.01 / 1.01, rel=1e-10)

    def test_occupations_are_squared_amplitudes(self):
        """Test occ = |amp|^2 for every sample."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.2, delta_omega=0.9))
        for sample in sample_trajectory(solution, np.linspace(0.0, 10.0, 11)):
            assert sample.occ_F == pytest.approx(abs(sample.amp_F) ** 2, rel=1e-14, abs=0)
            assert sample.norm <= 1 + 1e-10

    def test_ratio_law(self):
        """Test occ_F / occ_G = g_b^2 / g_a^2 at Raman resonance."""
        trajectory = sample_trajectory(solve_two_mode(SystemParams(g_a=1.0, g_b=0.1)), np.linspace(0, 100, 2000))
        mask = trajectory.occ_G > 1e-12
        np.testing.assert_allclose(trajectory.occ_F[mask] / trajectory.occ_G[mask], 0.01, rtol=1e-10)

    @given(two_mode_params(lossless=True))
    @settings(max_examples=20, deadline=None)
    def test_lossless_unitarity(self, params):
        """Test norm conservation without losses."""
        trajectory = sample_trajectory(solve_two_mode(params, quiet=True), np.linspace(0, 100 / params.g_a, 2000))
        assert np.abs(trajectory.norm - 1).max() <= 1e-10

    @given(two_mode_params(lossy=True))
    @settings(max_examples=20, deadline=None)
    def test_lossy_norm_non_increasing(self, params):
        """Test that losses only drain the norm."""
        trajectory = sample_trajectory(solve_two_mode(params, quiet=True), np.linspace(0, 100, 4000))
        assert np.all(np.diff(trajectory.norm) <= 1e-12)

    def test_single_mode_pads_f(self):
        """Test that single-mode trajectories carry a zero F row."""
        trajectory = sample_trajectory(solve_single_mode(SingleModeParams(g_a=1.0)), [0.0, 1.0])
        assert trajectory.amplitudes.shape == (3, 2)
        assert np.all(trajectory.occ_F == 0)

    def test_rejects_negative_times(self):
        """Test that negative times are refused."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        with pytest.raises(ParameterError):
            sample_trajectory(solution, [-1.0, 0.0])

    def test_rejects_decreasing_times(self):
        """Test that a decreasing grid is refused."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        with pytest.raises(ParameterError):
            sample_trajectory(solution, [0.0, 2.0, 1.0])

    def test_columns(self):
        """Test the tabular layout."""
        trajectory = sample_trajectory(solve_two_mode(SystemParams(g_a=1.0, g_b=0.1)), np.linspace(0, 1, 5))
        table = trajectory.as_columns()
        assert table.shape == (5, 11)
        np.testing.assert_allclose(table[:, 7] + table[:, 8] + table[:, 9], table[:, 10])


class TestOracleGolden:
    """Tests against the stored oracle trajectory of the lossy RARR case."""

    def test_stored_layout(self, oracle_golden):
        """Test that the stored run uses the trajectory columns and records its source."""
        text, config, table = oracle_golden
        assert f"# columns = {' '.join(TRAJECTORY_COLUMNS)}\n" in text
        assert "# summary.source = oracle\n" in text
        assert config.params == SystemParams(g_a=1.0, g_b=0.1, delta_omega=1.0, gamma=0.05, kappa=0.07)
        assert table.shape == (config.grid.count, len(TRAJECTORY_COLUMNS))

    def test_closed_form_matches(self, oracle_golden):
        """Test the residue solution against every stored column."""
        _, config, table = oracle_golden
        trajectory = sample_trajectory(solve_two_mode(config.params), table[:, 0])
        np.testing.assert_allclose(trajectory.as_columns(), table, rtol=0, atol=1e-8)

    def test_dense_output_sampling(self):
        """Test that an oracle run samples into a trajectory like a closed form does."""
        params = SystemParams(g_a=1.0, g_b=0.1)
        run = integrate(OdeSystem.from_two_mode(params), 5.0, tolerance=1e-10)
        grid = np.linspace(0.0, 5.0, 21)
        sampled = sample_trajectory(run, grid)
        expected = sample_trajectory(solve_two_mode(params), grid)
        assert len(sampled) == 21
        np.testing.assert_allclose(sampled.as_columns(), expected.as_columns(), rtol=0, atol=1e-8)
