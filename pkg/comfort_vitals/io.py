"""
File formats read and written by the command line.

SignalCsv: "# sample_rate_hz=<f>" (and optionally "# label=<text>") comment lines, then a "t_s,value"
or "value" header and one sample per row.

FrameArchive: a directory holding meta.json (width, height, fps, frame_count) and one raw planar
8-bit RGB file per frame, frame_000000.rgb onwards.

StudyCsv: a "# measure=hr|rr" comment line, then a "subject,PLF,PTF,CLF,CTF" header and one row per
subject.
"""

import io
import json
import os
from importlib import resources

import numpy as np
import pandas as pd

from comfort_vitals.exceptions import ComfortVitalsException, FormatError
from comfort_vitals.ippg import FrameSequence
from comfort_vitals.logger import logger
from comfort_vitals.signal_core import TimeSeries
from comfort_vitals.stats import GarmentCondition, Measure, StudyReport, StudyTable
from comfort_vitals.utils import write_json_to_file, write_to_file


FLOAT_FORMAT = "%.9g"
META_FILE = "meta.json"
FRAME_FILE = "frame_{:06d}.rgb"
META_KEYS = ("width", "height", "fps", "frame_count")
STUDY_HEADER = ["subject"] + [c.value for c in GarmentCondition]
EMBEDDED_STUDIES = {
    Measure.HEART_RATE: "heart_rate.csv",
    Measure.RESPIRATION_RATE: "respiration_rate.csv",
}


def _format_error(message: str) -> FormatError:
    logger.error(message)
    return FormatError(message)


def _read_text(path) -> str:
    try:
        with open(path) as file:
            return file.read()
    except OSError as error:
        raise _format_error(f"Unable to read {path}: {error}") from error


def _directives(text: str) -> dict:
    """key=value pairs from the leading comment lines."""
    directives = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if not line.startswith("#"):
            break
        key, sep, value = line[1:].partition("=")
        if sep:
            directives[key.strip()] = value.strip()
    return directives


def _read_table(text: str, path, **kwargs) -> pd.DataFrame:
    try:
        return pd.read_csv(io.StringIO(text), comment="#", float_precision="round_trip", **kwargs)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, ValueError) as error:
        raise _format_error(f"{path} is not valid CSV: {error}") from error


def read_signal_csv(path) -> TimeSeries:
    """Read a SignalCsv file.

    Args:
        path (str): File to read.

    Returns:
        TimeSeries: The samples, sample rate and label of the file.
    """
    text = _read_text(path)
    directives = _directives(text)
    if "sample_rate_hz" not in directives:
        raise _format_error(f"{path} lacks the '# sample_rate_hz=<f>' line")
    try:
        sample_rate_hz = float(directives["sample_rate_hz"])
    except ValueError:
        raise _format_error(f"{path} has a non-numeric sample rate {directives['sample_rate_hz']!r}")

    frame = _read_table(text, path)
    if list(frame.columns) not in (["value"], ["t_s", "value"]):
        raise _format_error(f"{path} header must be 't_s,value' or 'value', got {','.join(map(str, frame.columns))}")
    try:
        values = pd.to_numeric(frame["value"], errors="raise").to_numpy(dtype=float)
    except (ValueError, TypeError) as error:
        raise _format_error(f"{path} holds a non-numeric sample: {error}") from error

    try:
        signal = TimeSeries(values, sample_rate_hz, label=directives.get("label") or None)
    except ComfortVitalsException as error:
        raise _format_error(f"{path}: {error}") from error
    logger.debug(f"Read {len(signal)} samples at {sample_rate_hz} Hz from {path}")
    return signal


def write_signal_csv(path, signal: TimeSeries, with_time: bool = True) -> None:
    """Write a TimeSeries as SignalCsv, values with 9 significant digits."""
    header = f"# sample_rate_hz={signal.sample_rate_hz!r}\n"
    if signal.label:
        header += f"# label={signal.label}\n"
    columns = {"value": signal.samples}
    if with_time:
        columns = {"t_s": np.arange(len(signal)) / signal.sample_rate_hz, **columns}
    body = pd.DataFrame(columns).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    write_to_file(path, header + body)


def write_frame_archive(directory, frames: FrameSequence) -> None:
    """Write a FrameSequence as a FrameArchive directory."""
    os.makedirs(directory, exist_ok=True)
    write_json_to_file(
        os.path.join(directory, META_FILE),
        {"width": frames.width, "height": frames.height, "fps": frames.fps, "frame_count": len(frames)},
    )
    for index, frame in enumerate(frames.frames):
        np.ascontiguousarray(frame.transpose(2, 0, 1)).tofile(os.path.join(directory, FRAME_FILE.format(index)))
    logger.debug(f"Wrote {len(frames)} frames to {directory}")


def read_frame_archive(directory) -> FrameSequence:
    """Read a FrameArchive directory.

    Args:
        directory (str): Archive directory.

    Returns:
        FrameSequence: Frames in index order.
    """
    meta_path = os.path.join(directory, META_FILE)
    try:
        with open(meta_path) as file:
            meta = json.load(file)
    except OSError as error:
        raise _format_error(f"Unable to read {meta_path}: {error}") from error
    except json.JSONDecodeError as error:
        raise _format_error(f"{meta_path} is not valid JSON: {error}") from error

    missing = [key for key in META_KEYS if key not in meta]
    if missing:
        raise _format_error(f"{meta_path} lacks {missing}")
    try:
        width, height, frame_count = int(meta["width"]), int(meta["height"]), int(meta["frame_count"])
        fps = float(meta["fps"])
    except (TypeError, ValueError) as error:
        raise _format_error(f"{meta_path} has invalid values: {error}") from error
    if width <= 0 or height <= 0 or frame_count < 0:
        raise _format_error(f"{meta_path} declares {frame_count} frames of {width}x{height}")

    present = sorted(name for name in os.listdir(directory) if name.startswith("frame_") and name.endswith(".rgb"))
    expected = [FRAME_FILE.format(index) for index in range(frame_count)]
    if present != expected:
        raise _format_error(f"{directory} holds {len(present)} frame files, meta declares {frame_count}")

    frame_size = 3 * height * width
    frames = np.empty((frame_count, height, width, 3), dtype=np.uint8)
    for index, name in enumerate(expected):
        planes = np.fromfile(os.path.join(directory, name), dtype=np.uint8)
        if planes.size != frame_size:
            raise _format_error(f"{name} holds {planes.size} bytes, expected {frame_size}")
        frames[index] = planes.reshape(3, height, width).transpose(1, 2, 0)

    try:
        sequence = FrameSequence(frames, fps)
    except ComfortVitalsException as error:
        raise _format_error(f"{directory}: {error}") from error
    logger.debug(f"Read {frame_count} frames of {width}x{height} at {fps} fps from {directory}")
    return sequence


def _parse_study(text: str, path) -> StudyTable:
    directives = _directives(text)
    try:
        measure = Measure(directives.get("measure"))
    except ValueError:
        raise _format_error(f"{path} needs a '# measure=hr|rr' line, got {directives.get('measure')!r}")

    frame = _read_table(text, path, dtype={"subject": str})
    if list(frame.columns) != STUDY_HEADER:
        raise _format_error(f"{path} header must be {','.join(STUDY_HEADER)}")
    try:
        columns = {code: frame[code].to_numpy(dtype=float) for code in STUDY_HEADER[1:]}
    except (ValueError, TypeError) as error:
        raise _format_error(f"{path} holds a non-numeric rate: {error}") from error
    return StudyTable(subject_ids=tuple(frame["subject"]), columns=columns, measure=measure)


def read_study_csv(path) -> StudyTable:
    """Read a StudyCsv file into a StudyTable."""
    return _parse_study(_read_text(path), path)


def write_study_csv(path, table: StudyTable) -> None:
    frame = pd.DataFrame({"subject": table.subject_ids})
    for condition in GarmentCondition:
        frame[condition.value] = table.column(condition)
    body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    write_to_file(path, f"# measure={table.measure.value}\n" + body)


def embedded_study(measure) -> StudyTable:
    """The shipped heart-rate or respiration-rate study table."""
    try:
        measure = Measure(measure)
    except ValueError:
        raise _format_error(f"Unknown measure {measure!r}, expected hr or rr")
    name = EMBEDDED_STUDIES[measure]
    text = (resources.files("comfort_vitals") / "data" / name).read_text()
    return _parse_study(text, name)


def render_study_report(report: StudyReport) -> str:
    """Plain-text tables: statistics per condition, then the test results per comparison."""
    conditions = list(report.descriptive)
    lines = [f"{report.measure.long_name} ({report.n_subjects} subjects)", ""]
    lines.append(f"{'':<10}" + "".join(f"{c.value:>12}" for c in conditions))
    for label, attribute in (("Mean", "mean"), ("Std Dev", "std_dev"), ("Variance", "variance")):
        values = "".join(f"{getattr(report.descriptive[c], attribute):>12.2f}" for c in conditions)
        lines.append(f"{label:<10}{values}")
    for label in ("min", "q1", "median", "q3", "max"):
        lines.append(f"{label:<10}" + "".join(f"{getattr(report.box[c], label):>12.2f}" for c in conditions))

    lines += ["", f"{'':<22}" + "".join(f"{c.label:>14}" for c in report.comparisons)]
    rows = (
        ("Pearson Correlation", lambda c: "n/a" if c.paired.pearson_r is None else f"{c.paired.pearson_r:.6f}"),
        ("t stat", lambda c: f"{c.paired.t_stat:.6f}"),
        ("P(T<=t) one-tail", lambda c: f"{c.paired.p_one_tail:.6f}"),
        ("Verdict", lambda c: "significant" if c.significant else "none"),
    )
    for label, cell in rows:
        cells = "".join(f"{cell(c) if c.paired else c.error:>14}" for c in report.comparisons)
        lines.append(f"{label:<22}{cells}")
    lines.append(f"alpha = {report.alpha}")
    return "\n".join(lines) + "\n"
