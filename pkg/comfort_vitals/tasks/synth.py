from typing import Annotated

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.func import comfort_func
from comfort_vitals.io import write_frame_archive, write_signal_csv
from comfort_vitals.logger import logger
from comfort_vitals.schemas import SynthOutput
from comfort_vitals.synth import SynthSpec, synth_ecg, synth_frames, synth_resp
from comfort_vitals.utils import resolve_seed


SYNTH_KINDS = ("ecg", "resp", "frames")


@comfort_func(
    name="synth",
    label="Synthesize Signal",
    description="Write a synthetic ECG or respiration SignalCsv, or a face-video FrameArchive, with known rates.",
)
def synth(
    kind: Annotated[str, "What to synthesize: ecg, resp or frames."],
    output: Annotated[str, "SignalCsv file, or FrameArchive directory for frames."],
    rate: Annotated[float, "Heart rate (ecg, frames) or respiration rate (resp) per minute."],
    duration_s: Annotated[float, "Length in seconds."],
    sample_rate_hz: Annotated[float, "Sampling rate, or frame rate for frames."],
    noise_rms: Annotated[float, "White noise level (ecg, resp) or per-pixel noise in gray levels (frames)."] = 0.0,
    drift: Annotated[float, "Baseline drift amplitude (ecg, resp)."] = 0.0,
    rr: Annotated[float, "Respiration rate per minute (frames)."] = 15.0,
    width: Annotated[int, "Frame width in pixels (frames)."] = 64,
    height: Annotated[int, "Frame height in pixels (frames)."] = 48,
    seed: Annotated[int | None, "Noise seed; COMFORT_VITALS_SEED or 0 when omitted."] = None,
) -> Annotated[SynthOutput, "What was written where."]:
    if kind not in SYNTH_KINDS:
        logger.error(f"Unknown synth kind {kind}, preemptively failed.")
        raise InvalidParameterError(f"Unknown synth kind {kind!r}, expected one of {', '.join(SYNTH_KINDS)}")

    seed = resolve_seed(seed)
    logger.info(f"Starting {kind} synthesis at {rate}/min with seed {seed}...")
    if kind == "frames":
        frames = synth_frames(
            rate, rr, sample_rate_hz, duration_s, width, height, seed=seed, pixel_noise_rms=noise_rms
        )
        write_frame_archive(output, frames)
        samples = len(frames)
    else:
        spec = SynthSpec(
            rate_per_min=rate,
            duration_s=duration_s,
            sample_rate_hz=sample_rate_hz,
            noise_rms=noise_rms,
            baseline_drift_amp=drift,
            seed=seed,
        )
        signal = synth_ecg(spec) if kind == "ecg" else synth_resp(spec)
        write_signal_csv(output, signal)
        samples = len(signal)

    logger.info(f"Synthesis finished! {samples} samples written to {output}")
    return SynthOutput(kind=kind, path=output, seed=seed, samples=samples)
