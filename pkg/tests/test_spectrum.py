"""
Tests for the residue spectra, peak detection and their numerical cross-checks.
"""

import numpy as np
import pytest

from rarr_sim.dynamics import solve_single_mode, solve_two_mode
from rarr_sim.emission import emission_probabilities
from rarr_sim.errors import NonDecayingModeError, ParameterError
from rarr_sim.models import SingleModeParams, SystemParams
from rarr_sim.spectrum import (
    detect_peaks,
    full_spectrum,
    mode_spectrum,
    parseval_weight,
    peak_summary,
    residue_transform,
    single_mode_spectrum,
    truncated_double_quadrature,
)

LOSSY = SystemParams(g_a=1.0, g_b=0.1, gamma=0.05, kappa=0.07)
AXIS = np.linspace(-2.0, 2.0, 4001)


class TestModeSpectrum:
    """Tests for mode_spectrum and residue_transform."""

    def test_non_negative(self):
        """Test that both components are non-negative."""
        solution = solve_two_mode(LOSSY.with_detuning(0.7))
        for which in ("a", "b"):
            assert np.all(mode_spectrum(solution, which, AXIS) >= 0)

    def test_peaks_at_eigenfrequencies(self):
        """Test that the Lorentzian lines sit at D = -Im(lambda)."""
        solution = solve_two_mode(LOSSY)
        density = mode_spectrum(solution, "a", AXIS)
        found = [peak.location for peak in detect_peaks(AXIS, density)]
        bright = sorted(-lam.imag for lam in solution.lambdas if abs(lam.imag) > 0.5)
        np.testing.assert_allclose(found, bright, atol=2e-3)

    def test_decoupled_b_mode(self):
        """Test that g_b = 0 leaves the b spectrum empty."""
        params = SystemParams(g_a=1.0, delta_omega=0.4, gamma=0.05, kappa=0.07)
        assert np.all(mode_spectrum(solve_two_mode(params), "b", AXIS) == 0)

    def test_raman_resonance_weight_ratio(self):
        """Test that the b spectrum is (g_b / g_a)^2 times the a spectrum at delta_omega = 0."""
        solution = solve_two_mode(LOSSY)
        np.testing.assert_allclose(
            mode_spectrum(solution, "b", AXIS), 0.01 * mode_spectrum(solution, "a", AXIS), rtol=1e-9, atol=1e-15
        )

    def test_symmetric_with_balanced_damping(self):
        """Test the mode-a doublet is symmetric about D = 0 for Gamma = kappa."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1, gamma=0.06, kappa=0.06))
        density = mode_spectrum(solution, "a", AXIS)
        np.testing.assert_allclose(density, density[::-1], rtol=1e-9)
        heights = [peak.height for peak in detect_peaks(AXIS, density)]
        assert len(heights) == 2
        assert abs(heights[0] - heights[1]) <= 0.01 * max(heights)

    def test_lossless_refused(self):
        """Test that a spectrum without decay is refused."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        with pytest.raises(NonDecayingModeError, match="non-decaying mode"):
            mode_spectrum(solution, "a", AXIS)

    def test_unknown_mode(self):
        """Test that only modes a and b exist."""
        with pytest.raises(ParameterError, match="unknown mode"):
            residue_transform(solve_two_mode(LOSSY), "c", [0.0])


class TestSingleModeSpectrum:
    """Tests for the vacuum-Rabi doublet."""

    def test_doublet_splitting(self):
        """Test two peaks separated by twice the Rabi frequency."""
        solution = solve_single_mode(SingleModeParams(g_a=1.0, gamma=0.05, kappa=0.07))
        axis = np.linspace(-3.0, 3.0, 6001)
        peaks = detect_peaks(axis, single_mode_spectrum(solution, axis))
        assert len(peaks) == 2
        splitting = peaks[1].location - peaks[0].location
        assert splitting == pytest.approx(2 * solution.rabi_frequency.real, rel=0.05)

    def test_no_b_mode(self):
        """Test that the one-mode solution has no b component."""
        solution = solve_single_mode(SingleModeParams(g_a=1.0, kappa=0.1))
        with pytest.raises(ParameterError):
            residue_transform(solution, "b", [0.0])


class TestFullSpectrum:
    """Tests for full_spectrum and the peak summary."""

    @pytest.mark.parametrize("delta_omega, expected", [(0.0, 2), (1.0, 3)])
    def test_peak_counts(self, delta_omega, expected):
        """Test the Rabi doublet at Raman resonance and the triplet at Rabi resonance."""
        params = LOSSY.with_detuning(delta_omega)
        grid = full_spectrum(solve_two_mode(params), params, AXIS)
        assert len(grid.peaks["a"]) == expected
        assert len(grid.peaks["b"]) == expected

    def test_total_is_weighted_sum(self):
        """Test S = kappa / (2 pi) (S_a + S_b)."""
        params = LOSSY.with_detuning(1.0)
        grid = full_spectrum(solve_two_mode(params), params, AXIS)
        np.testing.assert_allclose(grid.s_total, 0.07 / (2 * np.pi) * (grid.s_a + grid.s_b))
        assert grid.as_columns().shape == (AXIS.size, 4)

    def test_carriers_shift_components(self):
        """Test that each component is centred on its own carrier."""
        params = SystemParams(g_a=1.0, g_b=0.1, delta_omega=1.0, gamma=0.05, kappa=0.07, omega_a=100.0, omega_b=50.0)
        solution = solve_two_mode(params)
        axis = np.concatenate([50.0 + AXIS, 100.0 + AXIS])
        grid = full_spectrum(solution, params, axis)
        np.testing.assert_allclose(grid.s_a[AXIS.size:], mode_spectrum(solution, "a", AXIS))
        np.testing.assert_allclose(grid.s_b[:AXIS.size], mode_spectrum(solution, "b", AXIS))

    def test_overlap_warning(self, caplog):
        """Test that overlapping carriers are logged."""
        params = SystemParams(g_a=1.0, g_b=0.1, gamma=0.05, kappa=0.07, omega_a=1.0, omega_b=0.5)
        with caplog.at_level("WARNING"):
            full_spectrum(solve_two_mode(params, quiet=True), params, AXIS)
        assert "overlap" in caplog.text

    def test_rejects_short_axis(self):
        """Test that a single-sample axis is refused."""
        with pytest.raises(ParameterError):
            full_spectrum(solve_two_mode(LOSSY), LOSSY, [0.0])

    def test_rejects_unordered_axis(self):
        """Test that repeated or decreasing samples are refused."""
        axis = np.concatenate([AXIS, AXIS])
        with pytest.raises(ParameterError, match="strictly increasing"):
            full_spectrum(solve_two_mode(LOSSY), LOSSY, axis)

    def test_peak_summary_keys(self):
        """Test the flat summary layout."""
        params = LOSSY.with_detuning(1.0)
        summary = peak_summary(full_spectrum(solve_two_mode(params), params, AXIS))
        assert summary["peaks.a.count"] == 3
        assert len(summary["peaks.b.locations"]) == 3
        assert len(summary["peaks.b.heights"]) == 3


class TestDetectPeaks:
    """Tests for detect_peaks."""

    def test_floor(self):
        """Test that peaks below the relative floor are dropped."""
        axis = np.arange(7.0)
        density = np.array([0, 1, 0, 1e-8, 0, 0.5, 0])
        assert [p.location for p in detect_peaks(axis, density)] == [1.0, 5.0]

    def test_flat_zero(self):
        """Test that an empty spectrum has no peaks."""
        assert detect_peaks(np.arange(5.0), np.zeros(5)) == ()


class TestConsistency:
    """Tests that the spectra agree with the emission totals and direct quadrature."""

    @pytest.mark.parametrize("delta_omega", [0.0, 1.0])
    def test_parseval(self, delta_omega):
        """Test that the integrated spectra reproduce p2 and p3."""
        params = LOSSY.with_detuning(delta_omega)
        solution = solve_two_mode(params)
        totals = emission_probabilities(solution, params)
        assert parseval_weight(solution, params, "a") == pytest.approx(totals.p2, rel=1e-4)
        assert parseval_weight(solution, params, "b") == pytest.approx(totals.p3, rel=1e-4)

    def test_truncated_quadrature(self):
        """Test the residue spectrum against Simpson quadrature of the time integrals."""
        params = LOSSY.with_detuning(1.0)
        solution = solve_two_mode(params)
        detuning = np.array([-1.6, -1.07, -1.0, -0.93, 0.0, 0.5, 1.0, 1.8])
        for which in ("a", "b"):
            expected = mode_spectrum(solution, which, detuning)
            numeric = truncated_double_quadrature(solution, which, detuning)
            np.testing.assert_allclose(numeric, expected, rtol=1e-6)

    def test_truncated_quadrature_needs_decay(self):
        """Test that the quadrature refuses non-decaying amplitudes."""
        solution = solve_two_mode(SystemParams(g_a=1.0, g_b=0.1))
        with pytest.raises(NonDecayingModeError):
            truncated_double_quadrature(solution, "a", [0.0])
