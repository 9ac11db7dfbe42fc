"""Pipelines for imaging photoplethysmograms."""

from comfort_vitals.signal_core import TimeSeries, moving_average, odd_window_len

from .default import RatePipeline
from .respiration import RespirationPipeline


class IppgPulsePipeline(RatePipeline):
    """Heart rate from the pulse band (about 0.7-3 Hz) of an iPPG."""

    kind = "ippg_hr"
    min_duration_s = 10.0
    min_sample_rate_hz = 15.0
    detrend_window_s = 2.0
    cutoff_hz = 3.0
    smoothing_window_len = None
    min_peak_distance_s = 0.33
    min_interval_s = 60.0 / 180.0
    max_interval_s = 60.0 / 42.0
    min_rate_per_min = 42.0
    max_rate_per_min = 180.0


class IppgBreathPipeline(RespirationPipeline):
    """Respiration rate from the baseline modulation of an iPPG."""

    kind = "ippg_rr"
    min_sample_rate_hz = 15.0
    baseline_window_s = 2.0

    @classmethod
    def prepare(cls, signal: TimeSeries) -> TimeSeries:
        return moving_average(signal, odd_window_len(cls.baseline_window_s, signal.sample_rate_hz))
