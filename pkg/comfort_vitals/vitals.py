"""Heart rate and respiration rate from peak spacing: rate = 60 / t_pp."""

from dataclasses import dataclass

import numpy as np

from comfort_vitals.dispatcher import dispatcher
from comfort_vitals.exceptions import InsufficientPeaksError, InvalidParameterError
from comfort_vitals.logger import logger
from comfort_vitals.signal_core import PeakList, TimeSeries


@dataclass(frozen=True)
class RateEstimate:
    """Events per minute with the peak-to-peak intervals it was computed from.

    Args:
        rate_per_min (float): Heart rate in bpm or respiration rate in breaths/min.
        intervals_s (tuple): Retained peak-to-peak durations, in seconds.
        n_peaks (int): Number of detected peaks; 0 for a rate measured elsewhere.
        rejected_intervals (int): Intervals dropped by the physiological window.
    """

    rate_per_min: float
    intervals_s: tuple = ()
    n_peaks: int = 0
    rejected_intervals: int = 0

    def __post_init__(self):
        object.__setattr__(self, "intervals_s", tuple(float(v) for v in self.intervals_s))
        if not np.isfinite(self.rate_per_min) or self.rate_per_min <= 0:
            raise InvalidParameterError(f"rate_per_min must be > 0, got {self.rate_per_min}")
        if self.n_peaks and self.n_peaks != len(self.intervals_s) + self.rejected_intervals + 1:
            raise InvalidParameterError(
                f"n_peaks ({self.n_peaks}) must equal retained + rejected intervals + 1"
            )

    @classmethod
    def measured(cls, rate_per_min: float) -> "RateEstimate":
        """A rate obtained outside this package, without interval detail."""
        return cls(rate_per_min=float(rate_per_min))


def rate_from_peaks(peaks: PeakList, min_interval_s: float, max_interval_s: float) -> RateEstimate:
    """Turn peak positions into a rate.

    Intervals outside [min_interval_s, max_interval_s] are rejected and the rate
    is 60 over the mean of the retained ones.

    Args:
        peaks (PeakList): Detected peaks, at least three.
        min_interval_s (float): Shortest accepted interval.
        max_interval_s (float): Longest accepted interval.

    Returns:
        RateEstimate: The estimate.
    """
    if not 0 < min_interval_s < max_interval_s:
        raise InvalidParameterError(
            f"Need 0 < min_interval_s < max_interval_s, got {min_interval_s}, {max_interval_s}"
        )
    if len(peaks) < 3:
        logger.error(f"Only {len(peaks)} peaks detected, need at least 3")
        raise InsufficientPeaksError(f"Only {len(peaks)} peaks detected, need at least 3")

    intervals = np.diff(peaks.indices) / peaks.sample_rate_hz
    accepted = (intervals >= min_interval_s) & (intervals <= max_interval_s)
    retained = intervals[accepted]
    if retained.size < 2:
        logger.error(
            f"Only {retained.size} of {intervals.size} intervals inside "
            f"[{min_interval_s}, {max_interval_s}] s"
        )
        raise InsufficientPeaksError(
            f"Only {retained.size} intervals inside [{min_interval_s}, {max_interval_s}] s, need 2"
        )

    rate = 60.0 / float(np.mean(retained))
    return RateEstimate(
        rate_per_min=rate,
        intervals_s=tuple(retained.tolist()),
        n_peaks=len(peaks),
        rejected_intervals=int(intervals.size - retained.size),
    )


def heart_rate_from_ecg(ecg: TimeSeries) -> RateEstimate:
    """Heart rate of an ECG through the ECG pipeline."""
    return dispatcher("ecg", "estimate", ecg)


def respiration_rate(resp: TimeSeries) -> RateEstimate:
    """Respiration rate of a respiration-band signal through the respiration pipeline."""
    return dispatcher("resp", "estimate", resp)
