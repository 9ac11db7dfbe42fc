from typing import Annotated

from comfort_vitals.exceptions import ComfortVitalsException
from comfort_vitals.func import comfort_func
from comfort_vitals.io import read_signal_csv
from comfort_vitals.logger import logger
from comfort_vitals.schemas import RateOutput
from comfort_vitals.utils import log_traceback, write_json_to_file
from comfort_vitals.vitals import heart_rate_from_ecg, respiration_rate


def _process(path, estimator, title, output_path):
    logger.info(f"Starting {title} extraction from {path}...")
    try:
        signal = read_signal_csv(path)
        estimate = estimator(signal)
    except ComfortVitalsException:
        raise
    except Exception as error:
        logger.error(f"{title} extraction failed: {error}")
        log_traceback()
        raise

    result = RateOutput.from_estimate(estimate)
    logger.info(f"{title} extraction finished! {result.rate_per_min:.2f}/min from {result.n_peaks} peaks")
    if output_path:
        write_json_to_file(output_path, result.model_dump(mode="json"))
    return result


@comfort_func(
    name="process-ecg",
    label="Process ECG",
    description="Extract the heart rate from an ECG SignalCsv file.",
)
def process_ecg(
    path: Annotated[str, "SignalCsv file holding the ECG."],
    output_path: Annotated[str, "Also write the JSON result to this file."] = "",
) -> Annotated[RateOutput, "Heart rate, peak count and rejected intervals."]:
    return _process(path, heart_rate_from_ecg, "Heart rate", output_path)


@comfort_func(
    name="process-resp",
    label="Process Respiration",
    description="Extract the respiration rate from a respiration-band SignalCsv file.",
)
def process_resp(
    path: Annotated[str, "SignalCsv file holding the respiration signal."],
    output_path: Annotated[str, "Also write the JSON result to this file."] = "",
) -> Annotated[RateOutput, "Respiration rate, peak count and rejected intervals."]:
    return _process(path, respiration_rate, "Respiration rate", output_path)
