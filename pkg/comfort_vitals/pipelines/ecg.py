"""ECG pipeline."""

from .default import RatePipeline


class EcgPipeline(RatePipeline):
    """Pipeline for ECG; prominence is scaled to the R-wave amplitude."""

    kind = "ecg"
    amplitude_percentile = 99.0
