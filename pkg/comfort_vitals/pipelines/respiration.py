"""Respiration band pipeline."""

from .default import RatePipeline


class RespirationPipeline(RatePipeline):
    """Pipeline for respiration signals."""

    kind = "resp"
    min_duration_s = 30.0
    min_sample_rate_hz = 8.0
    detrend_window_s = 10.0
    cutoff_hz = 1.0
    smoothing_window_len = None
    min_peak_distance_s = 2.0
    prominence_fraction = 0.3
    min_interval_s = 2.0
    max_interval_s = 10.0
    min_rate_per_min = 6.0
    max_rate_per_min = 30.0
