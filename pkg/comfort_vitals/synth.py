"""Synthetic ECG, respiration and face-video signals with known rates."""

import math
from dataclasses import dataclass

import numpy as np

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.ippg import FrameSequence, default_roi
from comfort_vitals.logger import logger
from comfort_vitals.signal_core import TimeSeries


# (amplitude, offset as a fraction of the period, offset cap in s, width in s)
ECG_P_WAVE = (0.12, -0.12, 0.16, 0.025)
ECG_R_WAVE = (1.0, 0.0, 0.0, 0.015)
ECG_T_WAVE = (0.25, 0.18, 0.2, 0.04)
ECG_MIN_SAMPLE_RATE_HZ = 100.0
ECG_DRIFT_HZ = 0.2
RESP_DRIFT_HZ = 0.02

FRAMES_MIN_FPS = 15.0
FRAMES_MIN_DURATION_S = 10.0
FRAMES_BASE_GREEN = 120.0
FRAMES_PULSE_AMPLITUDE = 3.0
FRAMES_RESP_AMPLITUDE = 4.0
FRAMES_RED = 150
FRAMES_BLUE = 100


@dataclass(frozen=True)
class SynthSpec:
    """Parameters of a synthetic rate signal.

    Args:
        rate_per_min (float): Target heart rate in bpm or respiration rate in breaths/min.
        duration_s (float): Signal length in seconds.
        sample_rate_hz (float): Sampling rate.
        noise_rms (float): Additive white Gaussian noise level, relative to unit amplitude.
        baseline_drift_amp (float): Amplitude of a slow sinusoidal baseline drift.
        seed (int): Noise generator seed.
    """

    rate_per_min: float
    duration_s: float
    sample_rate_hz: float
    noise_rms: float = 0.0
    baseline_drift_amp: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ("rate_per_min", "duration_s", "sample_rate_hz"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidParameterError(f"{name} must be > 0, got {value}")
        for name in ("noise_rms", "baseline_drift_amp"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidParameterError(f"{name} must be >= 0, got {value}")
        if self.rate_per_min * self.duration_s / 60 < 3:
            raise InvalidParameterError(
                f"{self.rate_per_min}/min over {self.duration_s} s gives fewer than 3 events"
            )

    @property
    def period_s(self) -> float:
        return 60.0 / self.rate_per_min

    @property
    def n_samples(self) -> int:
        return int(round(self.duration_s * self.sample_rate_hz))


def _noise_and_drift(spec: SynthSpec, drift_hz: float) -> np.ndarray:
    rng = np.random.default_rng(spec.seed)
    t = np.arange(spec.n_samples) / spec.sample_rate_hz
    noise = rng.normal(0.0, spec.noise_rms, spec.n_samples) if spec.noise_rms else 0.0
    drift = spec.baseline_drift_amp * np.sin(2 * np.pi * drift_hz * t)
    return noise + drift


def r_wave_indices(spec: SynthSpec) -> np.ndarray:
    """Sample positions of the R-waves: rounded multiples of the period."""
    period_samples = spec.period_s * spec.sample_rate_hz
    count = math.ceil(spec.n_samples / period_samples) + 1
    positions = np.round(np.arange(count) * period_samples).astype(np.int64)
    return positions[positions < spec.n_samples]


def synth_ecg(spec: SynthSpec) -> TimeSeries:
    """Periodic P-R-T template of Gaussians with a unit R-wave.

    Wave offsets scale with the period (capped so P and T stay close to the
    R-wave at slow rates); widths are fixed.
    """
    if spec.sample_rate_hz < ECG_MIN_SAMPLE_RATE_HZ:
        logger.error(f"ECG synthesis needs at least {ECG_MIN_SAMPLE_RATE_HZ} Hz")
        raise InvalidParameterError(
            f"synth_ecg needs sample_rate_hz >= {ECG_MIN_SAMPLE_RATE_HZ}, got {spec.sample_rate_hz}"
        )

    t = np.arange(spec.n_samples) / spec.sample_rate_hz
    period_samples = spec.period_s * spec.sample_rate_hz
    # One beat either side so P and T tails continue across the edges.
    beats = np.round(np.arange(-1, math.ceil(spec.n_samples / period_samples) + 2) * period_samples)
    centers = beats / spec.sample_rate_hz

    samples = np.zeros(spec.n_samples)
    for amplitude, offset_fraction, offset_cap_s, width_s in (ECG_P_WAVE, ECG_R_WAVE, ECG_T_WAVE):
        offset_s = math.copysign(min(abs(offset_fraction) * spec.period_s, offset_cap_s), offset_fraction)
        for center in centers + offset_s:
            lo = max(0, int((center - 6 * width_s) * spec.sample_rate_hz))
            hi = min(spec.n_samples, int((center + 6 * width_s) * spec.sample_rate_hz) + 2)
            if lo >= hi:
                continue
            samples[lo:hi] += amplitude * np.exp(-0.5 * ((t[lo:hi] - center) / width_s) ** 2)

    samples += _noise_and_drift(spec, ECG_DRIFT_HZ)
    logger.debug(f"Synthesized {spec.duration_s} s of ECG at {spec.rate_per_min} bpm")
    return TimeSeries(samples, spec.sample_rate_hz, label="ecg")


def synth_resp(spec: SynthSpec) -> TimeSeries:
    """Unit sinusoid at the breathing frequency, plus noise and drift."""
    if spec.rate_per_min / 60 >= spec.sample_rate_hz / 2:
        raise InvalidParameterError(
            f"Breathing frequency {spec.rate_per_min / 60} Hz is not below Nyquist"
        )

    t = np.arange(spec.n_samples) / spec.sample_rate_hz
    samples = np.sin(2 * np.pi * spec.rate_per_min / 60 * t)
    samples = samples + _noise_and_drift(spec, RESP_DRIFT_HZ)
    logger.debug(f"Synthesized {spec.duration_s} s of respiration at {spec.rate_per_min}/min")
    return TimeSeries(samples, spec.sample_rate_hz, label="resp")


def synth_frames(
    hr_bpm: float,
    rr_per_min: float,
    fps: float,
    duration_s: float,
    width: int,
    height: int,
    *,
    seed: int = 0,
    pixel_noise_rms: float = 2.0,
) -> FrameSequence:
    """Frames whose green channel pulses with heart rate and respiration inside the default ROI.

    Inside the ROI the green level is G0 + a sin(2 pi hr/60 t) + b sin(2 pi rr/60 t);
    outside it stays at G0. Red and blue are constant. Seeded per-pixel noise
    dithers the 8-bit quantization so ROI means follow the modulation.

    Args:
        hr_bpm (float): Pulse rate.
        rr_per_min (float): Respiration rate.
        fps (float): Frame rate, at least 15.
        duration_s (float): Length, at least 10 s.
        width (int): Frame width in pixels.
        height (int): Frame height in pixels.
        seed (int): Noise seed.
        pixel_noise_rms (float): Per-pixel noise in gray levels.

    Returns:
        FrameSequence: The frames.
    """
    if fps < FRAMES_MIN_FPS:
        raise InvalidParameterError(f"fps must be >= {FRAMES_MIN_FPS}, got {fps}")
    if duration_s < FRAMES_MIN_DURATION_S:
        raise InvalidParameterError(f"duration_s must be >= {FRAMES_MIN_DURATION_S}, got {duration_s}")
    if hr_bpm <= 0 or rr_per_min <= 0:
        raise InvalidParameterError(f"Rates must be > 0, got hr {hr_bpm}, rr {rr_per_min}")
    if hr_bpm / 60 >= fps / 2:
        raise InvalidParameterError(f"Pulse frequency {hr_bpm / 60} Hz is not below {fps / 2} Hz")
    if width <= 0 or height <= 0:
        raise InvalidParameterError(f"Frame size must be positive, got {width}x{height}")
    if pixel_noise_rms < 0:
        raise InvalidParameterError(f"pixel_noise_rms must be >= 0, got {pixel_noise_rms}")

    n_frames = int(round(duration_s * fps))
    t = np.arange(n_frames) / fps
    modulation = FRAMES_PULSE_AMPLITUDE * np.sin(2 * np.pi * hr_bpm / 60 * t)
    modulation += FRAMES_RESP_AMPLITUDE * np.sin(2 * np.pi * rr_per_min / 60 * t)

    roi = default_roi(width, height)
    green = np.full((n_frames, height, width), FRAMES_BASE_GREEN)
    green[:, roi.y : roi.y + roi.h, roi.x : roi.x + roi.w] += modulation[:, None, None]
    if pixel_noise_rms:
        rng = np.random.default_rng(seed)
        green += rng.normal(0.0, pixel_noise_rms, green.shape)

    frames = np.empty((n_frames, height, width, 3), dtype=np.uint8)
    frames[..., 0] = FRAMES_RED
    frames[..., 1] = np.clip(np.round(green), 0, 255).astype(np.uint8)
    frames[..., 2] = FRAMES_BLUE
    logger.debug(f"Synthesized {n_frames} frames of {width}x{height} at {fps} fps")
    return FrameSequence(frames, fps)
