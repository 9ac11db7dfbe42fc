"""Default rate pipeline: detrend, low-pass, optional smoothing, peak finding, rate."""

from comfort_vitals.exceptions import (
    EstimationFailedError,
    InsufficientPeaksError,
    InvalidParameterError,
    TooShortError,
)
from comfort_vitals.logger import logger
from comfort_vitals.signal_core import (
    TimeSeries,
    detrend,
    find_peaks,
    low_pass,
    moving_average,
    robust_amplitude,
)
from comfort_vitals.vitals import RateEstimate, rate_from_peaks


class RatePipeline:
    """Preprocess -> peak-find -> rate, configured through class attributes.

    Subclasses override the attributes for their signal; the defaults are the
    ECG values.
    """

    kind = "default"
    min_duration_s = 5.0
    min_sample_rate_hz = 100.0
    detrend_window_s = 0.6
    cutoff_hz = 25.0
    smoothing_window_len: int | None = 5
    min_peak_distance_s = 0.25
    amplitude_percentile = 90.0
    prominence_fraction = 0.5
    min_interval_s = 0.33
    max_interval_s = 2.0
    min_rate_per_min = 30.0
    max_rate_per_min = 180.0

    @classmethod
    def check_input(cls, signal: TimeSeries) -> None:
        if signal.sample_rate_hz < cls.min_sample_rate_hz:
            logger.error(
                f"[{cls.kind}] Sample rate {signal.sample_rate_hz} Hz below {cls.min_sample_rate_hz} Hz"
            )
            raise InvalidParameterError(
                f"{cls.kind} needs sample_rate_hz >= {cls.min_sample_rate_hz}, got {signal.sample_rate_hz}"
            )
        if signal.duration_s < cls.min_duration_s:
            logger.error(f"[{cls.kind}] Signal of {signal.duration_s:.2f} s is too short")
            raise TooShortError(
                f"{cls.kind} needs at least {cls.min_duration_s} s of signal, got {signal.duration_s:.2f} s"
            )

    @classmethod
    def prepare(cls, signal: TimeSeries) -> TimeSeries:
        """Hook run before detrending; identity by default."""
        return signal

    @classmethod
    def preprocess(cls, signal: TimeSeries) -> tuple[TimeSeries, TimeSeries]:
        """Return the detrended signal and the fully processed one."""
        detrended = detrend(cls.prepare(signal), cls.detrend_window_s)
        processed = low_pass(detrended, cls.cutoff_hz)
        if cls.smoothing_window_len:
            processed = moving_average(processed, cls.smoothing_window_len)
        return detrended, processed

    @classmethod
    def detect(cls, signal: TimeSeries):
        """Peaks of the processed signal, thresholded relative to its amplitude."""
        detrended, processed = cls.preprocess(signal)
        min_prominence = cls.prominence_fraction * robust_amplitude(
            detrended, cls.amplitude_percentile
        )
        return find_peaks(processed, cls.min_peak_distance_s, min_prominence)

    @classmethod
    def estimate(cls, signal: TimeSeries) -> RateEstimate:
        """Estimate the rate of a signal.

        Args:
            signal (TimeSeries): The raw signal.

        Returns:
            RateEstimate: Rate with its retained intervals.
        """
        logger.info(f"[{cls.kind}] Starting rate estimation on {signal.duration_s:.1f} s of signal...")
        cls.check_input(signal)

        peaks = cls.detect(signal)
        if len(peaks) < 3:
            logger.error(f"[{cls.kind}] Only {len(peaks)} peaks detected")
            raise InsufficientPeaksError(f"{cls.kind}: only {len(peaks)} peaks detected, need at least 3")

        estimate = rate_from_peaks(peaks, cls.min_interval_s, cls.max_interval_s)
        if not cls.min_rate_per_min <= estimate.rate_per_min <= cls.max_rate_per_min:
            logger.error(
                f"[{cls.kind}] Rate {estimate.rate_per_min:.2f}/min outside "
                f"[{cls.min_rate_per_min}, {cls.max_rate_per_min}]"
            )
            raise EstimationFailedError(
                f"{cls.kind}: rate {estimate.rate_per_min:.2f}/min outside "
                f"[{cls.min_rate_per_min}, {cls.max_rate_per_min}]"
            )

        logger.info(
            f"[{cls.kind}] Rate {estimate.rate_per_min:.2f}/min from {estimate.n_peaks} peaks "
            f"({estimate.rejected_intervals} intervals rejected)"
        )
        return estimate
