"""JSON documents printed by the command-line tasks."""

from pydantic import BaseModel, ConfigDict, Field

from comfort_vitals.stats import StudyReport
from comfort_vitals.suggest import Suggestion
from comfort_vitals.vitals import RateEstimate


class RateOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    rate_per_min: float = Field(gt=0)
    n_peaks: int = Field(ge=0)
    rejected_intervals: int = Field(ge=0)

    @classmethod
    def from_estimate(cls, estimate: RateEstimate) -> "RateOutput":
        return cls(
            rate_per_min=estimate.rate_per_min,
            n_peaks=estimate.n_peaks,
            rejected_intervals=estimate.rejected_intervals,
        )


class RoiOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: int = Field(ge=0)
    y: int = Field(ge=0)
    w: int = Field(gt=0)
    h: int = Field(gt=0)


class IppgOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    hr: RateOutput
    rr: RateOutput
    roi: RoiOutput


class SynthOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    path: str
    seed: int
    samples: int = Field(ge=0)


# Shipped under docs/schemas/<name>.json
SCHEMAS = {
    "rate": RateOutput,
    "ippg": IppgOutput,
    "study_report": StudyReport,
    "suggestion": Suggestion,
    "synth": SynthOutput,
}
