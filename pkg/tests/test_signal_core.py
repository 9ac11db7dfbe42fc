import numpy as np
import pytest

from comfort_vitals.exceptions import InvalidParameterError, TooShortError
from comfort_vitals.signal_core import (
    PeakList,
    TimeSeries,
    detrend,
    find_peaks,
    low_pass,
    lowpass_taps,
    moving_average,
    odd_window_len,
    robust_amplitude,
)


def _amplitude_at(samples, cycles):
    spectrum = np.fft.rfft(samples)
    return 2 * np.abs(spectrum[cycles]) / samples.size


class TestTimeSeries:
    def test_rejects_non_finite_samples(self):
        with pytest.raises(InvalidParameterError):
            TimeSeries([0.0, np.nan, 1.0], 100)

    @pytest.mark.parametrize("sample_rate_hz", [0, -1, np.inf])
    def test_rejects_bad_sample_rate(self, sample_rate_hz):
        with pytest.raises(InvalidParameterError):
            TimeSeries([0.0, 1.0], sample_rate_hz)

    def test_samples_are_read_only(self):
        signal = TimeSeries([1, 2, 3], 10, label="ecg")
        with pytest.raises(ValueError):
            signal.samples[0] = 5.0
        assert signal.duration_s == pytest.approx(0.3)
        assert signal.samples.dtype == np.float64

    def test_empty_series_is_valid(self):
        assert len(TimeSeries([], 10)) == 0


class TestLowPass:
    def test_constant_passes_unchanged(self):
        signal = TimeSeries(np.full(1000, 3.5), 250)
        assert np.allclose(low_pass(signal, 10).samples, 3.5, rtol=0, atol=1e-9)

    def test_pass_band_tone_keeps_its_amplitude(self):
        fs, cutoff = 250.0, 10.0
        t = np.arange(2500) / fs
        signal = TimeSeries(np.sin(2 * np.pi * 0.2 * cutoff * t), fs)
        filtered = low_pass(signal, cutoff).samples
        # 2000 interior samples hold exactly 16 periods of the 2 Hz tone.
        interior = filtered[250:2250]
        assert _amplitude_at(interior, 16) == pytest.approx(1.0, rel=0.01)

    def test_stop_band_tone_is_attenuated(self):
        fs, cutoff = 250.0, 10.0
        t = np.arange(2500) / fs
        samples = np.sin(2 * np.pi * 4 * cutoff * t)
        filtered = low_pass(TimeSeries(samples, fs), cutoff).samples
        half = lowpass_taps(cutoff, fs).size // 2
        interior = slice(half, samples.size - half)
        rms_in = np.sqrt(np.mean(samples[interior] ** 2))
        rms_out = np.sqrt(np.mean(filtered[interior] ** 2))
        assert rms_out < 0.05 * rms_in

    def test_output_keeps_length_and_rate(self, ecg_72):
        filtered = low_pass(ecg_72, 25)
        assert len(filtered) == len(ecg_72)
        assert filtered.sample_rate_hz == ecg_72.sample_rate_hz
        assert filtered.label == "ecg"

    def test_tap_count_is_odd(self):
        for cutoff, fs in [(25, 250), (1, 32), (3, 30), (10, 250)]:
            assert lowpass_taps(cutoff, fs).size % 2 == 1

    @pytest.mark.parametrize("cutoff_hz", [0, -1, 125, 300])
    def test_rejects_cutoff_outside_nyquist(self, cutoff_hz):
        with pytest.raises(InvalidParameterError):
            low_pass(TimeSeries(np.zeros(2000), 250), cutoff_hz)

    def test_rejects_signal_shorter_than_filter(self):
        with pytest.raises(TooShortError):
            low_pass(TimeSeries(np.zeros(100), 250), 10)

    def test_linearity(self, rng):
        x = rng.normal(size=1500)
        y = rng.normal(size=1500)
        a, b = rng.uniform(-3, 3, size=2)
        combined = low_pass(TimeSeries(a * x + b * y, 250), 20).samples
        separate = a * low_pass(TimeSeries(x, 250), 20).samples + b * low_pass(TimeSeries(y, 250), 20).samples
        scale = np.max(np.abs(separate))
        assert np.allclose(combined, separate, rtol=1e-9, atol=1e-9 * scale)

    def test_shift_equivariance_away_from_edges(self, rng):
        x = rng.normal(size=2000)
        shift = 37
        half = lowpass_taps(20, 250).size // 2
        full = low_pass(TimeSeries(x, 250), 20).samples
        shifted = low_pass(TimeSeries(x[shift:], 250), 20).samples
        interior = np.arange(half, x.size - shift - half)
        assert np.allclose(shifted[interior], full[interior + shift], rtol=1e-12, atol=1e-12)


class TestMovingAverage:
    def test_shrinking_edge_windows(self):
        result = moving_average(TimeSeries([1, 2, 3, 4, 5], 1), 3)
        assert result.samples.tolist() == pytest.approx([1.5, 2, 3, 4, 4.5])

    def test_window_of_one_is_identity(self, rng):
        signal = TimeSeries(rng.normal(size=50), 10)
        assert np.array_equal(moving_average(signal, 1).samples, signal.samples)

    def test_constant_is_exact(self):
        signal = TimeSeries(np.full(101, 0.1), 10)
        assert np.array_equal(moving_average(signal, 7).samples, signal.samples)

    @pytest.mark.parametrize("window_len", [0, 2, 6, 13])
    def test_rejects_bad_window(self, window_len):
        with pytest.raises(InvalidParameterError):
            moving_average(TimeSeries(np.arange(11.0), 1), window_len)

    def test_odd_window_len(self):
        assert odd_window_len(0.6, 250) == 151
        assert odd_window_len(2.0, 30) == 61
        assert odd_window_len(1.2, 100) == 121


class TestDetrend:
    def test_constant_becomes_zero(self):
        result = detrend(TimeSeries(np.full(500, 7.25), 100), 1.0)
        assert np.array_equal(result.samples, np.zeros(500))

    def test_zero_stays_zero(self):
        result = detrend(TimeSeries(np.zeros(500), 100), 1.0)
        assert np.array_equal(result.samples, np.zeros(500))

    def test_removes_slow_ramp(self):
        fs = 100.0
        t = np.arange(6000) / fs
        ramp = 0.1 * t
        result = detrend(TimeSeries(ramp + np.sin(2 * np.pi * t), fs), 1.0).samples
        slope = np.polyfit(t, result, 1)[0]
        assert abs(np.corrcoef(result, ramp)[0, 1]) < 0.05
        assert abs(slope) < 0.1 * 0.05

    def test_idempotent_on_baseline_free_signal(self):
        # The 1.2 s window spans 121 samples, exactly 11 periods of an 11-sample tone.
        n = np.arange(3000)
        x = np.sin(2 * np.pi * n / 11) + 0.4 * np.cos(2 * np.pi * 3 * n / 11)
        once = detrend(TimeSeries(x, 100), 1.2).samples
        twice = detrend(TimeSeries(once, 100), 1.2).samples
        interior = slice(120, x.size - 120)
        assert np.allclose(twice[interior], once[interior], rtol=1e-6, atol=1e-9)

    def test_rejects_window_below_three_samples(self):
        with pytest.raises(InvalidParameterError):
            detrend(TimeSeries(np.zeros(100), 10), 0.2)

    def test_rejects_window_longer_than_signal(self):
        with pytest.raises(InvalidParameterError):
            detrend(TimeSeries(np.zeros(100), 10), 20.0)


class TestFindPeaks:
    def test_single_triangle(self):
        samples = np.concatenate([np.arange(0, 10), np.arange(10, -1, -1)]).astype(float)
        peaks = find_peaks(TimeSeries(samples, 100), 0.0, 0.0)
        assert peaks.indices.tolist() == [10]

    def test_sinusoid_gives_one_peak_per_period(self):
        n = np.arange(400)
        signal = TimeSeries(np.sin(2 * np.pi * n / 40), 40)
        peaks = find_peaks(signal, 0.5, 0.5)
        assert len(peaks) == 10
        assert np.all(np.abs(np.diff(peaks.indices) - 40) <= 1)

    def test_constant_has_no_peaks(self):
        assert len(find_peaks(TimeSeries(np.full(100, 2.0), 10), 0.1, 0.0)) == 0

    def test_plateau_reports_leftmost_sample(self):
        samples = np.array([0, 1, 3, 3, 3, 1, 0], dtype=float)
        assert find_peaks(TimeSeries(samples, 1), 0, 0).indices.tolist() == [2]

    def test_short_signal_is_empty(self):
        assert len(find_peaks(TimeSeries([1.0, 2.0], 1), 0, 0)) == 0

    def test_rejects_negative_parameters(self):
        with pytest.raises(InvalidParameterError):
            find_peaks(TimeSeries(np.zeros(10), 1), -1, 0)
        with pytest.raises(InvalidParameterError):
            find_peaks(TimeSeries(np.zeros(10), 1), 0, -0.5)

    def test_result_satisfies_peak_list_invariants(self, rng):
        signal = TimeSeries(rng.normal(size=3000), 100)
        peaks = find_peaks(signal, 0.07, 0.3)
        gaps = np.diff(peaks.indices)
        assert np.all(gaps > 0)
        assert np.all(gaps >= 0.07 * 100)
        assert peaks.indices.min() >= 0
        assert peaks.indices.max() < len(signal)
        assert peaks.source_length == len(signal)

    def test_offset_does_not_move_peaks(self, rng):
        samples = rng.normal(size=2000)
        base = find_peaks(TimeSeries(samples, 100), 0.05, 0.5)
        shifted = find_peaks(TimeSeries(samples + 5.0, 100), 0.05, 0.5)
        assert np.array_equal(base.indices, shifted.indices)

    def test_scaling_with_scaled_prominence_keeps_peaks(self, rng):
        samples = rng.normal(size=2000)
        base = find_peaks(TimeSeries(samples, 100), 0.05, 0.5)
        scaled = find_peaks(TimeSeries(3.0 * samples, 100), 0.05, 1.5)
        assert np.array_equal(base.indices, scaled.indices)

    def test_higher_peak_wins_within_distance(self):
        samples = np.zeros(50)
        samples[10] = 1.0
        samples[14] = 2.0
        samples[40] = 1.5
        assert find_peaks(TimeSeries(samples, 10), 1.0, 0.1).indices.tolist() == [14, 40]


class TestPeakList:
    def test_rejects_unsorted_indices(self):
        with pytest.raises(InvalidParameterError):
            PeakList([5, 3], 10, 1)

    def test_rejects_out_of_range_indices(self):
        with pytest.raises(InvalidParameterError):
            PeakList([2, 10], 10, 1)

    def test_rejects_gap_below_min_distance(self):
        with pytest.raises(InvalidParameterError):
            PeakList([0, 2, 8], 10, 1, min_distance_samples=3)

    def test_times(self):
        assert PeakList([0, 50, 100], 200, 50).times_s().tolist() == [0.0, 1.0, 2.0]


def test_robust_amplitude_is_percentile_of_magnitude():
    signal = TimeSeries(-np.arange(101.0), 1)
    assert robust_amplitude(signal) == pytest.approx(90.0)
    assert robust_amplitude(signal, 50) == pytest.approx(50.0)
