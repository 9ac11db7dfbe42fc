import importlib

from comfort_vitals.exceptions import ComfortVitalsException
from comfort_vitals.logger import logger


_DEFAULT_PIPELINES_MAPPING = {
    "ecg": "comfort_vitals.pipelines.ecg.EcgPipeline",
    "resp": "comfort_vitals.pipelines.respiration.RespirationPipeline",
    "ippg": "comfort_vitals.pipelines.ippg.IppgPulsePipeline",
    "ippg_hr": "comfort_vitals.pipelines.ippg.IppgPulsePipeline",
    "ippg_rr": "comfort_vitals.pipelines.ippg.IppgBreathPipeline",
}


def get_pipeline(kind: str, pipelines_mapping: dict | None = None):
    """Resolve the pipeline class registered for a signal kind.

    Args:
        kind (str): Signal kind, e.g. "ecg" or "resp".
        pipelines_mapping (dict, optional): Replacement for the default kind -> dotted path mapping.

    Returns:
        type: The pipeline class.
    """
    mapping = pipelines_mapping or _DEFAULT_PIPELINES_MAPPING

    pipeline = mapping.get(kind)
    if not pipeline:
        logger.error(f"Unable to find the pipeline for signal kind: {kind}, preemptively failed.")
        raise ComfortVitalsException(
            f"Unable to find the pipeline for signal kind: {kind}, preemptively failed."
        )

    logger.debug(f"Found pipeline {pipeline}")

    module_name, class_name = pipeline.rsplit(".", 1)
    try:
        pipeline_class = getattr(importlib.import_module(module_name), class_name)
    except (ImportError, AttributeError):
        logger.error(f"Unable to locate the class {pipeline}, preemptively failed.")
        raise ComfortVitalsException(f"Unable to locate the class {pipeline}, preemptively failed.")

    return pipeline_class


def dispatcher(kind: str, method: str, *args, **kwargs):
    """Run a method of the pipeline registered for a signal kind.

    Args:
        kind (str): Signal kind used to look up the pipeline.
        method (str): The name of the pipeline method to run.

    Returns:
        The method's return value.
    """
    pipelines_mapping = kwargs.pop("pipelines_mapping", None)

    logger.debug(f"Executing dispatcher for {method} on {kind}")
    pipeline_class = get_pipeline(kind, pipelines_mapping)

    try:
        pipeline_method = getattr(pipeline_class, method)
    except AttributeError:
        logger.error(
            f"Unable to locate the method {method} for {pipeline_class.__name__}, preemptively failed."
        )
        raise ComfortVitalsException(
            f"Unable to locate the method {method} for {pipeline_class.__name__}, preemptively failed."
        )

    return pipeline_method(*args, **kwargs)


def estimate(signal, **kwargs):
    """Estimate a rate with the pipeline matching the signal's label."""
    if not signal.label:
        logger.error("Signal has no label, cannot choose a pipeline.")
        raise ComfortVitalsException("Signal has no label, cannot choose a pipeline.")
    return dispatcher(signal.label, "estimate", signal, **kwargs)
