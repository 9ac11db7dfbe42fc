"""
Uniformly sampled signals and the preprocessing primitives the rate pipelines are built from.

The primitives are low-pass filtering, centered moving averages, moving-average detrending and
prominence-based peak finding. Every primitive is length preserving so that peak indices found on a
processed signal can be read straight back onto the raw one.
"""

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import signal as sp_signal

from comfort_vitals.exceptions import InvalidParameterError, TooShortError
from comfort_vitals.logger import logger


# Hamming window main-lobe transition width, in multiples of fs / numtaps.
HAMMING_TRANSITION_FACTOR = 3.3
# Transition band as a fraction of the cutoff frequency.
TRANSITION_FRACTION = 0.25
ROBUST_AMPLITUDE_PERCENTILE = 90.0


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A uniformly sampled real-valued signal.

    Args:
        samples: Signal values, any unit. Copied into a read-only float array.
        sample_rate_hz (float): Sampling rate, strictly positive.
        label (str, optional): Kind of signal, e.g. "ecg", "resp" or "ippg".
    """

    samples: np.ndarray
    sample_rate_hz: float
    label: str | None = None

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 1:
            raise InvalidParameterError(
                f"TimeSeries samples must be one-dimensional, got shape {samples.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise InvalidParameterError("TimeSeries samples must all be finite")

        sample_rate_hz = float(self.sample_rate_hz)
        if not math.isfinite(sample_rate_hz) or sample_rate_hz <= 0:
            raise InvalidParameterError(
                f"sample_rate_hz must be > 0, got {self.sample_rate_hz}"
            )

        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate_hz", sample_rate_hz)

    def __len__(self):
        return int(self.samples.size)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self.sample_rate_hz == other.sample_rate_hz
            and self.label == other.label
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None

    @property
    def duration_s(self) -> float:
        return len(self) / self.sample_rate_hz

    def with_samples(self, samples) -> "TimeSeries":
        """Same sample rate and label, new values."""
        return replace(self, samples=samples)


@dataclass(frozen=True, eq=False)
class PeakList:
    """Strictly increasing sample positions of detected peaks.

    Args:
        indices: Peak positions in samples.
        source_length (int): Length of the signal the peaks were found on.
        sample_rate_hz (float): Sampling rate of that signal.
        min_distance_samples (float): Minimum spacing enforced at detection time.
    """

    indices: np.ndarray
    source_length: int
    sample_rate_hz: float
    min_distance_samples: float = field(default=0.0)

    def __post_init__(self):
        indices = np.array(self.indices, dtype=np.int64).reshape(-1)
        source_length = int(self.source_length)

        if indices.size and (indices[0] < 0 or indices[-1] >= source_length):
            raise InvalidParameterError(
                f"Peak indices must lie in [0, {source_length}), got {indices.tolist()}"
            )
        gaps = np.diff(indices)
        if np.any(gaps <= 0):
            raise InvalidParameterError("Peak indices must be strictly increasing")
        if np.any(gaps < self.min_distance_samples):
            raise InvalidParameterError(
                f"Peak gaps must be >= {self.min_distance_samples} samples"
            )
        if not self.sample_rate_hz > 0:
            raise InvalidParameterError(
                f"sample_rate_hz must be > 0, got {self.sample_rate_hz}"
            )

        indices.setflags(write=False)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "source_length", source_length)
        object.__setattr__(self, "sample_rate_hz", float(self.sample_rate_hz))

    def __len__(self):
        return int(self.indices.size)

    def times_s(self) -> np.ndarray:
        return self.indices / self.sample_rate_hz


def lowpass_taps(cutoff_hz: float, sample_rate_hz: float) -> np.ndarray:
    """Hamming-windowed ideal low-pass response.

    The length is the smallest odd tap count whose transition band is at most
    a quarter of the cutoff frequency.
    """
    transition_hz = TRANSITION_FRACTION * cutoff_hz
    numtaps = math.ceil(HAMMING_TRANSITION_FACTOR * sample_rate_hz / transition_hz)
    if numtaps % 2 == 0:
        numtaps += 1
    return sp_signal.firwin(numtaps, cutoff_hz, window="hamming", fs=sample_rate_hz)


def low_pass(signal: TimeSeries, cutoff_hz: float) -> TimeSeries:
    """Zero-phase FIR low-pass filter.

    The symmetric taps are applied as a centered convolution over a
    reflection-padded copy, so the output has no delay and peak timing is kept.

    Args:
        signal (TimeSeries): Input signal.
        cutoff_hz (float): Cutoff frequency, strictly between 0 and Nyquist.

    Returns:
        TimeSeries: Filtered signal of the same length and sample rate.
    """
    nyquist = signal.sample_rate_hz / 2
    if not 0 < cutoff_hz < nyquist:
        logger.error(f"Cutoff {cutoff_hz} Hz outside (0, {nyquist}) Hz")
        raise InvalidParameterError(
            f"cutoff_hz must lie in (0, {nyquist}) Hz, got {cutoff_hz}"
        )

    taps = lowpass_taps(cutoff_hz, signal.sample_rate_hz)
    if len(signal) < taps.size:
        logger.error(f"Signal of {len(signal)} samples is shorter than the {taps.size}-tap filter")
        raise TooShortError(
            f"Signal has {len(signal)} samples, the {cutoff_hz} Hz filter needs at least {taps.size}"
        )

    half = taps.size // 2
    padded = np.pad(signal.samples, half, mode="reflect")
    filtered = np.convolve(padded, taps, mode="valid")
    logger.debug(f"low_pass: {taps.size} taps at {cutoff_hz} Hz on {len(signal)} samples")
    return signal.with_samples(filtered)


def moving_average(signal: TimeSeries, window_len: int) -> TimeSeries:
    """Centered moving average; windows shrink to the available samples at the edges.

    Args:
        signal (TimeSeries): Input signal.
        window_len (int): Odd window length in samples, 1 <= window_len <= len(signal).

    Returns:
        TimeSeries: Smoothed signal of the same length.
    """
    n = len(signal)
    if window_len % 2 == 0 or not 1 <= window_len <= n:
        logger.error(f"Invalid moving average window {window_len} for {n} samples")
        raise InvalidParameterError(
            f"window_len must be odd and within [1, {n}], got {window_len}"
        )

    x = signal.samples
    # Sums are taken relative to the first sample so a constant passes exactly.
    reference = x[0]
    cumulative = np.concatenate(([0.0], np.cumsum(x - reference)))
    half = window_len // 2
    positions = np.arange(n)
    lo = np.maximum(positions - half, 0)
    hi = np.minimum(positions + half + 1, n)
    averaged = reference + (cumulative[hi] - cumulative[lo]) / (hi - lo)
    return signal.with_samples(averaged)


def odd_window_len(window_s: float, sample_rate_hz: float) -> int:
    """Window duration converted to the nearest odd sample count."""
    return 2 * int(math.floor(window_s * sample_rate_hz / 2)) + 1


def detrend(signal: TimeSeries, baseline_window_s: float) -> TimeSeries:
    """Remove the moving-average baseline.

    Args:
        signal (TimeSeries): Input signal.
        baseline_window_s (float): Baseline window in seconds, at least three samples long.

    Returns:
        TimeSeries: The signal minus its baseline.
    """
    raw_len = baseline_window_s * signal.sample_rate_hz
    if raw_len < 3:
        logger.error(f"Baseline window of {raw_len:.2f} samples is shorter than 3")
        raise InvalidParameterError(
            f"baseline_window_s must span at least 3 samples, got {raw_len:.2f}"
        )

    window_len = odd_window_len(baseline_window_s, signal.sample_rate_hz)
    if window_len > len(signal):
        logger.error(f"Baseline window of {window_len} samples exceeds {len(signal)} samples")
        raise InvalidParameterError(
            f"baseline window of {window_len} samples exceeds the signal length {len(signal)}"
        )

    baseline = moving_average(signal, window_len)
    return signal.with_samples(signal.samples - baseline.samples)


def find_peaks(signal: TimeSeries, min_distance_s: float, min_prominence: float) -> PeakList:
    """Local maxima with enough topographic prominence, thinned by spacing.

    Peaks are kept greedily in descending prominence order; a candidate closer
    than the minimum distance to an already kept peak is dropped. Plateaus
    report their leftmost sample, and equal prominences favour the earlier peak.

    Args:
        signal (TimeSeries): Input signal.
        min_distance_s (float): Minimum spacing between kept peaks, in seconds.
        min_prominence (float): Minimum topographic prominence, in signal units.

    Returns:
        PeakList: The kept peaks in increasing order.
    """
    if min_distance_s < 0 or min_prominence < 0:
        raise InvalidParameterError(
            f"min_distance_s and min_prominence must be >= 0, got {min_distance_s}, {min_prominence}"
        )

    distance = min_distance_s * signal.sample_rate_hz
    if len(signal) < 3:
        return PeakList([], len(signal), signal.sample_rate_hz, distance)

    _, properties = sp_signal.find_peaks(
        signal.samples, prominence=min_prominence, plateau_size=1
    )
    positions = properties["left_edges"]
    prominences = properties["prominences"]

    keep = np.ones(positions.size, dtype=bool)
    for current in np.argsort(-prominences, kind="stable"):
        if not keep[current]:
            continue
        j = current - 1
        while j >= 0 and positions[current] - positions[j] < distance:
            keep[j] = False
            j -= 1
        j = current + 1
        while j < positions.size and positions[j] - positions[current] < distance:
            keep[j] = False
            j += 1

    indices = positions[keep]
    logger.debug(
        f"find_peaks: {positions.size} candidates, {indices.size} kept "
        f"(distance {distance:.1f} samples, prominence {min_prominence:.4g})"
    )
    return PeakList(indices, len(signal), signal.sample_rate_hz, distance)


def robust_amplitude(signal: TimeSeries, percentile: float = ROBUST_AMPLITUDE_PERCENTILE) -> float:
    """Percentile of the absolute sample values."""
    if len(signal) == 0:
        return 0.0
    return float(np.percentile(np.abs(signal.samples), percentile))
