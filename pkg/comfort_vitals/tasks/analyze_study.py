from typing import Annotated

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.func import comfort_func
from comfort_vitals.io import embedded_study, read_study_csv
from comfort_vitals.logger import logger
from comfort_vitals.stats import DEFAULT_ALPHA, StudyReport, analyze_study
from comfort_vitals.utils import write_json_to_file


@comfort_func(
    name="analyze-study",
    label="Analyze Study",
    description="Descriptive statistics and paired t-tests over a subjects x garment-condition table.",
)
def analyze_study_table(
    path: Annotated[str, "StudyCsv file."] = "",
    embedded: Annotated[str, "Use the shipped dataset instead: hr or rr."] = "",
    alpha: Annotated[float, "Significance level of the verdicts."] = DEFAULT_ALPHA,
    output_path: Annotated[str, "Also write the JSON report to this file."] = "",
) -> Annotated[StudyReport, "The study report."]:
    """Analyze a study table.

    Exactly one of path or embedded selects the data.
    """
    if bool(path) == bool(embedded):
        logger.error("Give either a StudyCsv path or an embedded dataset")
        raise InvalidParameterError("Give either a StudyCsv path or --embedded hr|rr")

    table = embedded_study(embedded) if embedded else read_study_csv(path)
    logger.info(f"Loaded {table.measure.long_name} table of {len(table.subject_ids)} subjects")
    report = analyze_study(table, alpha=alpha)
    for comparison in report.comparisons:
        logger.info(f"[{comparison.label}] {comparison.verdict}")

    if output_path:
        write_json_to_file(output_path, report.model_dump(mode="json"))
    return report
