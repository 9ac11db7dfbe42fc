"""
Contact-free heart and respiration rate from a stored face video.

Each frame is reduced to the mean green value over a region of interest, giving an imaging
photoplethysmogram (iPPG) sampled at the frame rate. The pulse is read from its 0.7-3 Hz band and
respiration from its slow baseline modulation.
"""

import math
from dataclasses import dataclass

import numpy as np

from comfort_vitals.dispatcher import dispatcher
from comfort_vitals.exceptions import InvalidParameterError, InvalidRoiError, TooShortError
from comfort_vitals.logger import logger
from comfort_vitals.signal_core import TimeSeries
from comfort_vitals.vitals import RateEstimate


GREEN = 1
MIN_ROI_PIXELS = 16
DEFAULT_ROI_WIDTH_FRACTION = 0.4
DEFAULT_ROI_HEIGHT_FRACTION = 0.3


@dataclass(frozen=True, eq=False)
class FrameSequence:
    """RGB frames at a fixed frame rate.

    Args:
        frames: Array of shape (frame_count, height, width, 3), values 0-255; non-uint8 input is rounded to the nearest level.
        fps (float): Frame rate, strictly positive.
    """

    frames: np.ndarray
    fps: float

    def __post_init__(self):
        frames = np.asarray(self.frames)
        if frames.ndim != 4 or frames.shape[-1] != 3:
            raise InvalidParameterError(
                f"frames must have shape (count, height, width, 3), got {frames.shape}"
            )
        if frames.shape[1] == 0 or frames.shape[2] == 0:
            raise InvalidParameterError("frames must have a positive width and height")
        if frames.dtype != np.uint8:
            if not np.all(np.isfinite(frames)):
                raise InvalidParameterError("frame values must be finite")
            frames = np.rint(frames)
            if frames.size and (frames.min() < 0 or frames.max() > 255):
                raise InvalidParameterError("frame values must lie in 0-255")
            frames = frames.astype(np.uint8)
        if not math.isfinite(self.fps) or self.fps <= 0:
            raise InvalidParameterError(f"fps must be > 0, got {self.fps}")

        frames.setflags(write=False)
        object.__setattr__(self, "frames", frames)
        object.__setattr__(self, "fps", float(self.fps))

    def __len__(self):
        return int(self.frames.shape[0])

    @property
    def height(self) -> int:
        return int(self.frames.shape[1])

    @property
    def width(self) -> int:
        return int(self.frames.shape[2])


@dataclass(frozen=True)
class Roi:
    """Pixel rectangle: left column x, top row y, width w, height h."""

    x: int
    y: int
    w: int
    h: int

    def check_within(self, width: int, height: int) -> None:
        if self.w <= 0 or self.h <= 0 or self.w * self.h < MIN_ROI_PIXELS:
            logger.error(f"ROI {self} covers fewer than {MIN_ROI_PIXELS} pixels")
            raise InvalidRoiError(f"ROI {self} must cover at least {MIN_ROI_PIXELS} pixels")
        if self.x < 0 or self.y < 0 or self.x + self.w > width or self.y + self.h > height:
            logger.error(f"ROI {self} lies outside the {width}x{height} frame")
            raise InvalidRoiError(f"ROI {self} lies outside the {width}x{height} frame")


def default_roi(width: int, height: int) -> Roi:
    """Centered rectangle of 40% of the width by 30% of the height."""
    w = max(1, round(width * DEFAULT_ROI_WIDTH_FRACTION))
    h = max(1, round(height * DEFAULT_ROI_HEIGHT_FRACTION))
    return Roi(x=(width - w) // 2, y=(height - h) // 2, w=w, h=h)


def extract_ippg(frames: FrameSequence, roi: Roi | None = None) -> TimeSeries:
    """Spatial mean of the green channel over the ROI, one sample per frame.

    Args:
        frames (FrameSequence): The video.
        roi (Roi, optional): Region to average; the default ROI when omitted.

    Returns:
        TimeSeries: The iPPG, sampled at the frame rate and labelled "ippg".
    """
    if roi is None:
        roi = default_roi(frames.width, frames.height)
    roi.check_within(frames.width, frames.height)
    if len(frames) < 2:
        logger.error(f"Only {len(frames)} frames, need at least 2")
        raise TooShortError(f"Only {len(frames)} frames, need at least 2")

    green = frames.frames[:, roi.y : roi.y + roi.h, roi.x : roi.x + roi.w, GREEN]
    samples = green.astype(np.float64).reshape(len(frames), -1).sum(axis=1) / (roi.w * roi.h)
    logger.debug(f"Extracted iPPG from {len(frames)} frames over {roi}")
    return TimeSeries(samples, frames.fps, label="ippg")


def hr_from_ippg(ippg: TimeSeries) -> RateEstimate:
    """Heart rate of an iPPG."""
    return dispatcher("ippg_hr", "estimate", ippg)


def rr_from_ippg(ippg: TimeSeries) -> RateEstimate:
    """Respiration rate from the baseline of an iPPG."""
    return dispatcher("ippg_rr", "estimate", ippg)
