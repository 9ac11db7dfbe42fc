from typing import Annotated

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.func import comfort_func
from comfort_vitals.io import read_signal_csv
from comfort_vitals.logger import logger
from comfort_vitals.suggest import (
    ComfortReading,
    EmotionResponse,
    NegativeItem,
    PositiveItem,
    Suggestion,
    emotion_score,
    make_context,
    suggest_garment,
)
from comfort_vitals.tasks.ippg import ippg_rates
from comfort_vitals.utils import write_json_to_file
from comfort_vitals.vitals import RateEstimate, heart_rate_from_ecg, respiration_rate


def _items(values, enum, kind):
    try:
        return frozenset(enum(value.strip().lower()) for value in values)
    except ValueError:
        allowed = ", ".join(member.value for member in enum)
        logger.error(f"Unknown {kind} emotion item in {list(values)}")
        raise InvalidParameterError(f"Unknown {kind} emotion item in {list(values)}, expected {allowed}")


def _reading(hr, rr, hr_baseline, ecg, resp, frames) -> ComfortReading:
    """Explicit rates win over signal files; an ECG or respiration file wins over frames."""
    hr_estimate = RateEstimate.measured(hr) if hr is not None else None
    rr_estimate = RateEstimate.measured(rr) if rr is not None else None

    if hr_estimate is None and ecg:
        hr_estimate = heart_rate_from_ecg(read_signal_csv(ecg))
    if rr_estimate is None and resp:
        rr_estimate = respiration_rate(read_signal_csv(resp))
    if frames and (hr_estimate is None or rr_estimate is None):
        _, frames_hr, frames_rr = ippg_rates(frames)
        hr_estimate = hr_estimate or frames_hr
        rr_estimate = rr_estimate or frames_rr

    return ComfortReading(hr=hr_estimate, rr=rr_estimate, hr_baseline=hr_baseline)


@comfort_func(
    name="suggest",
    label="Suggest Garment",
    description="Suggest a fabric and fit from comfort parameters, ambient context and emotional response.",
)
def suggest(
    temperature_c: Annotated[float, "Ambient temperature in degrees Celsius."],
    humidity_pct: Annotated[float, "Relative humidity in percent."],
    activity: Annotated[str, "Activity level: rest, moderate or intense."],
    wear_duration_h: Annotated[float, "Planned wear time in hours."] = 0.0,
    hr: Annotated[float | None, "Measured heart rate in bpm."] = None,
    rr: Annotated[float | None, "Measured respiration rate in breaths/min."] = None,
    hr_baseline: Annotated[float | None, "Resting heart rate in bpm."] = None,
    ecg: Annotated[str, "ECG SignalCsv to take the heart rate from."] = "",
    resp: Annotated[str, "Respiration SignalCsv to take the respiration rate from."] = "",
    frames: Annotated[str, "FrameArchive to take both rates from."] = "",
    positive: Annotated[tuple, "Positive emotion items: soft, comfortable, relaxed."] = (),
    negative: Annotated[tuple, "Negative emotion items: stiff, itchy, annoyed."] = (),
    emotion: Annotated[float | None, "Emotion score in [-1, 1]; overrides the items."] = None,
    output_path: Annotated[str, "Also write the JSON suggestion to this file."] = "",
) -> Annotated[Suggestion, "Fabric, fit, matched rule and rationale."]:
    logger.info("Starting garment suggestion...")
    ctx = make_context(
        temperature_c=temperature_c,
        humidity_pct=humidity_pct,
        activity=activity,
        wear_duration_h=wear_duration_h,
    )
    reading = _reading(hr, rr, hr_baseline, ecg, resp, frames)

    if emotion is None and (positive or negative):
        emotion = emotion_score(
            EmotionResponse(
                positive_items=_items(positive, PositiveItem, "positive"),
                negative_items=_items(negative, NegativeItem, "negative"),
            )
        )
        logger.debug(f"Emotion score {emotion:.3f}")

    suggestion = suggest_garment(reading, ctx, emotion)
    logger.info(f"Garment suggestion finished! {suggestion.fabric.value} {suggestion.fit.value} ({suggestion.rule_id})")
    if output_path:
        write_json_to_file(output_path, suggestion.model_dump(mode="json"))
    return suggestion
