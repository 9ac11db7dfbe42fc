import numpy as np
import pytest

from comfort_vitals.exceptions import (
    InsufficientPeaksError,
    InvalidParameterError,
    TooShortError,
)
from comfort_vitals.signal_core import PeakList, TimeSeries
from comfort_vitals.synth import SynthSpec, synth_ecg, synth_resp
from comfort_vitals.vitals import RateEstimate, heart_rate_from_ecg, rate_from_peaks, respiration_rate


class TestRateFromPeaks:
    def test_one_second_spacing(self):
        estimate = rate_from_peaks(PeakList([0, 100, 200, 300], 400, 100), 0.33, 2.0)
        assert estimate.rate_per_min == pytest.approx(60.0)
        assert estimate.n_peaks == 4
        assert estimate.rejected_intervals == 0

    def test_uniform_point_eight_seconds(self):
        estimate = rate_from_peaks(PeakList([0, 80, 160, 240], 300, 100), 0.33, 2.0)
        assert estimate.rate_per_min == pytest.approx(75.0)

    def test_rejects_interval_outside_window(self):
        estimate = rate_from_peaks(PeakList([0, 100, 200, 700], 800, 100), 0.33, 2.0)
        assert estimate.rate_per_min == pytest.approx(60.0)
        assert estimate.rejected_intervals == 1
        assert estimate.intervals_s == (1.0, 1.0)
        assert estimate.n_peaks == len(estimate.intervals_s) + estimate.rejected_intervals + 1

    def test_needs_three_peaks(self):
        with pytest.raises(InsufficientPeaksError):
            rate_from_peaks(PeakList([0, 100], 200, 100), 0.33, 2.0)

    def test_needs_two_retained_intervals(self):
        with pytest.raises(InsufficientPeaksError):
            rate_from_peaks(PeakList([0, 100, 600, 1100], 1200, 100), 0.33, 2.0)

    @pytest.mark.parametrize("bounds", [(0, 2.0), (2.0, 2.0), (3.0, 2.0)])
    def test_rejects_bad_window(self, bounds):
        with pytest.raises(InvalidParameterError):
            rate_from_peaks(PeakList([0, 100, 200], 300, 100), *bounds)


class TestRateEstimate:
    def test_measured_rate_has_no_intervals(self):
        estimate = RateEstimate.measured(72)
        assert estimate.rate_per_min == 72.0
        assert estimate.intervals_s == ()

    def test_rejects_non_positive_rate(self):
        with pytest.raises(InvalidParameterError):
            RateEstimate(rate_per_min=0.0)

    def test_rejects_inconsistent_peak_count(self):
        with pytest.raises(InvalidParameterError):
            RateEstimate(rate_per_min=60, intervals_s=(1.0, 1.0), n_peaks=5, rejected_intervals=0)


class TestHeartRate:
    @pytest.mark.parametrize("bpm", [50, 60, 72, 90, 120, 150])
    def test_round_trip(self, bpm):
        ecg = synth_ecg(SynthSpec(rate_per_min=bpm, duration_s=60, sample_rate_hz=250, noise_rms=0.05, seed=bpm))
        assert heart_rate_from_ecg(ecg).rate_per_min == pytest.approx(bpm, abs=1.0)

    def test_clean_sixty(self):
        ecg = synth_ecg(SynthSpec(rate_per_min=60, duration_s=30, sample_rate_hz=250))
        assert heart_rate_from_ecg(ecg).rate_per_min == pytest.approx(60.0, abs=0.1)

    def test_rate_is_sixty_over_mean_interval(self, ecg_72):
        estimate = heart_rate_from_ecg(ecg_72)
        assert estimate.rate_per_min == pytest.approx(60.0 / np.mean(estimate.intervals_s), rel=1e-12)
        assert estimate.n_peaks == len(estimate.intervals_s) + estimate.rejected_intervals + 1
        assert all(0.33 <= interval <= 2.0 for interval in estimate.intervals_s)

    def test_constant_signal_has_no_peaks(self):
        with pytest.raises(InsufficientPeaksError):
            heart_rate_from_ecg(TimeSeries(np.full(2500, 0.4), 250))

    def test_too_short(self):
        ecg = synth_ecg(SynthSpec(rate_per_min=72, duration_s=3, sample_rate_hz=250))
        with pytest.raises(TooShortError):
            heart_rate_from_ecg(ecg)

    def test_low_sample_rate(self):
        with pytest.raises(InvalidParameterError):
            heart_rate_from_ecg(TimeSeries(np.zeros(500), 50))

    def test_amplitude_invariance(self, ecg_72):
        base = heart_rate_from_ecg(ecg_72)
        scaled = heart_rate_from_ecg(ecg_72.with_samples(3.0 * ecg_72.samples))
        assert scaled.rate_per_min == pytest.approx(base.rate_per_min, rel=1e-12)

    def test_offset_invariance(self, ecg_72):
        base = heart_rate_from_ecg(ecg_72)
        shifted = heart_rate_from_ecg(ecg_72.with_samples(ecg_72.samples + 5.0))
        assert shifted.rate_per_min == pytest.approx(base.rate_per_min, rel=1e-12)

    def test_time_rescaling(self):
        ecg = synth_ecg(SynthSpec(rate_per_min=60, duration_s=30, sample_rate_hz=250))
        base = heart_rate_from_ecg(ecg)
        relabelled = heart_rate_from_ecg(TimeSeries(ecg.samples, 500, label="ecg"))
        assert relabelled.rate_per_min == pytest.approx(2 * base.rate_per_min, rel=1e-12)


class TestRespirationRate:
    def test_clean_fifteen(self, resp_15):
        assert respiration_rate(resp_15).rate_per_min == pytest.approx(15.0, abs=0.2)

    @pytest.mark.parametrize("rate", [8, 12, 14, 15, 20, 25])
    def test_round_trip(self, rate):
        resp = synth_resp(SynthSpec(rate_per_min=rate, duration_s=120, sample_rate_hz=32, noise_rms=0.05, seed=rate))
        assert respiration_rate(resp).rate_per_min == pytest.approx(rate, abs=0.5)

    def test_too_short(self):
        resp = synth_resp(SynthSpec(rate_per_min=15, duration_s=10, sample_rate_hz=32))
        with pytest.raises(TooShortError):
            respiration_rate(resp)

    def test_drift_is_removed(self):
        resp = synth_resp(
            SynthSpec(rate_per_min=12, duration_s=120, sample_rate_hz=32, baseline_drift_amp=2.0, noise_rms=0.05)
        )
        assert respiration_rate(resp).rate_per_min == pytest.approx(12, abs=0.5)

    def test_time_rescaling_is_approximate(self):
        resp = synth_resp(SynthSpec(rate_per_min=14, duration_s=120, sample_rate_hz=32, noise_rms=0.05, seed=7))
        base = respiration_rate(resp).rate_per_min
        faster = respiration_rate(TimeSeries(resp.samples, 48, label="resp")).rate_per_min
        assert faster / base == pytest.approx(1.5, rel=0.02)
