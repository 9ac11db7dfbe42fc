from typing import Annotated

from comfort_vitals.exceptions import ComfortVitalsException
from comfort_vitals.func import comfort_func
from comfort_vitals.io import read_frame_archive
from comfort_vitals.ippg import Roi, default_roi, extract_ippg, hr_from_ippg, rr_from_ippg
from comfort_vitals.logger import logger
from comfort_vitals.schemas import IppgOutput, RateOutput, RoiOutput
from comfort_vitals.utils import log_traceback, write_json_to_file


def ippg_rates(archive: str, roi: Roi | None = None):
    """Frames, ROI and the (hr, rr) estimates of a FrameArchive."""
    frames = read_frame_archive(archive)
    if roi is None:
        roi = default_roi(frames.width, frames.height)
    signal = extract_ippg(frames, roi)
    logger.debug(f"[{archive}] iPPG of {len(signal)} samples at {signal.sample_rate_hz} fps")
    return roi, hr_from_ippg(signal), rr_from_ippg(signal)


@comfort_func(
    name="ippg",
    label="iPPG Rates",
    description="Estimate heart and respiration rate from a face-video FrameArchive.",
)
def ippg(
    archive: Annotated[str, "FrameArchive directory."],
    roi: Annotated[Roi | None, "Region of interest; the centered default when omitted."] = None,
    output_path: Annotated[str, "Also write the JSON result to this file."] = "",
) -> Annotated[IppgOutput, "Heart rate, respiration rate and the ROI used."]:
    logger.info(f"Starting iPPG extraction from {archive}...")
    try:
        roi, hr, rr = ippg_rates(archive, roi)
    except ComfortVitalsException:
        raise
    except Exception as error:
        logger.error(f"iPPG extraction failed: {error}")
        log_traceback()
        raise

    result = IppgOutput(
        hr=RateOutput.from_estimate(hr),
        rr=RateOutput.from_estimate(rr),
        roi=RoiOutput(x=roi.x, y=roi.y, w=roi.w, h=roi.h),
    )
    logger.info(f"iPPG extraction finished! hr {hr.rate_per_min:.2f} bpm, rr {rr.rate_per_min:.2f}/min")
    if output_path:
        write_json_to_file(output_path, result.model_dump(mode="json"))
    return result
