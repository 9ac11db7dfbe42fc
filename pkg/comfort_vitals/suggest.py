"""
Garment fabric and fit suggestion.

An ordered rule table is evaluated top to bottom (exertion, then climate, then resting default) and
the first match wins. A negative emotional response turns a tight fit loose.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.knowledge import knowledge_rows
from comfort_vitals.logger import logger
from comfort_vitals.pipelines.respiration import RespirationPipeline
from comfort_vitals.stats import Fabric, Fit
from comfort_vitals.vitals import RateEstimate


HR_ELEVATION_FRACTION = 0.2
HOT_TEMPERATURE_C = 30.0
HUMID_PCT = 50.0
EMOTION_OVERRIDE_THRESHOLD = -1.0 / 3.0
HR_WINDOW = (30.0, 180.0)
RR_WINDOW = (RespirationPipeline.min_rate_per_min, RespirationPipeline.max_rate_per_min)

MOISTURE_RECOMMENDATION = "100% polyester provides better moisture management for athletes"
DAILY_USE_RECOMMENDATION = "natural fiber-based garments and loose fit for daily use"


class Activity(str, Enum):
    REST = "Rest"
    MODERATE = "Moderate"
    INTENSE = "Intense"

    @classmethod
    def parse(cls, value: str) -> "Activity":
        for member in cls:
            if member.value.lower() == str(value).lower():
                return member
        raise InvalidParameterError(f"Unknown activity {value!r}, expected one of rest, moderate, intense")


class PositiveItem(str, Enum):
    SOFT = "soft"
    COMFORTABLE = "comfortable"
    RELAXED = "relaxed"


class NegativeItem(str, Enum):
    STIFF = "stiff"
    ITCHY = "itchy"
    ANNOYED = "annoyed"


class ComfortContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    temperature_c: float = Field(ge=-40.0, le=60.0)
    humidity_pct: float = Field(ge=0.0, le=100.0)
    activity: Activity
    wear_duration_h: float = Field(default=0.0, ge=0.0)


class EmotionResponse(BaseModel):
    """Post-wear survey answers; the two vocabularies do not overlap."""

    model_config = ConfigDict(frozen=True)

    positive_items: frozenset[PositiveItem] = frozenset()
    negative_items: frozenset[NegativeItem] = frozenset()


class Suggestion(BaseModel):
    model_config = ConfigDict(frozen=True)

    fabric: Fabric
    fit: Fit
    rule_id: str
    rationale: str
    fit_override: bool = False


@dataclass(frozen=True)
class ComfortReading:
    """Measured comfort parameters; rates may be missing when not measured."""

    hr: RateEstimate | None = None
    rr: RateEstimate | None = None
    hr_baseline: float | None = None

    def __post_init__(self):
        for name, rate, (low, high) in (("hr", self.hr, HR_WINDOW), ("rr", self.rr, RR_WINDOW)):
            if rate is not None and not low <= rate.rate_per_min <= high:
                raise InvalidParameterError(
                    f"{name} {rate.rate_per_min:.2f}/min outside [{low}, {high}]"
                )
        if self.hr_baseline is not None and not self.hr_baseline > 0:
            raise InvalidParameterError(f"hr_baseline must be > 0, got {self.hr_baseline}")

    @property
    def hr_elevated(self) -> bool:
        if self.hr is None or self.hr_baseline is None:
            return False
        return self.hr.rate_per_min >= (1 + HR_ELEVATION_FRACTION) * self.hr_baseline


@dataclass(frozen=True)
class Rule:
    """A row of the suggestion table.

    A rule is backed by a fabric type of the knowledge base, a published
    recommendation, or both.
    """

    rule_id: str
    description: str
    fabric: Fabric
    fit: Fit
    matches: Callable[[ComfortReading, ComfortContext], bool]
    knowledge_fabric: str | None = None
    recommendation: str | None = None

    @property
    def citation(self) -> str:
        parts = []
        if self.knowledge_fabric is not None:
            row = next(r for r in knowledge_rows() if r.fabric_type == self.knowledge_fabric)
            parts.append(
                f"knowledge base: {row.fabric_type}, heart rate {row.heart_rate.value}, "
                f"temperature {row.temperature or 'n/a'}, humidity {row.humidity or 'n/a'} {row.reference}"
            )
        if self.recommendation is not None:
            parts.append(f"recommendation: {self.recommendation}")
        return "; ".join(parts)


RULES = (
    Rule(
        rule_id="R1",
        description="Exertion: intense activity or heart rate at least 20% over baseline",
        fabric=Fabric.POLYESTER_BLEND,
        fit=Fit.LOOSE,
        matches=lambda reading, ctx: ctx.activity is Activity.INTENSE or reading.hr_elevated,
        knowledge_fabric="100% polyester (low moisture regain)",
        recommendation=MOISTURE_RECOMMENDATION,
    ),
    Rule(
        rule_id="R2",
        description=(
            "Hot and humid: temperature at least 30 C and humidity at least 50%; "
            "wearers in a humid summer lab preferred polyester loose fit although they reported preferring cotton"
        ),
        fabric=Fabric.POLYESTER_BLEND,
        fit=Fit.LOOSE,
        matches=lambda reading, ctx: ctx.temperature_c >= HOT_TEMPERATURE_C and ctx.humidity_pct >= HUMID_PCT,
        knowledge_fabric="Wool + cotton (high moisture regain)",
    ),
    Rule(
        rule_id="R3",
        description="Rest or moderate activity below 30 C: breathability",
        fabric=Fabric.COTTON_BLEND,
        fit=Fit.LOOSE,
        matches=lambda reading, ctx: (
            ctx.activity in (Activity.REST, Activity.MODERATE) and ctx.temperature_c < HOT_TEMPERATURE_C
        ),
        recommendation=DAILY_USE_RECOMMENDATION,
    ),
    Rule(
        rule_id="R4",
        description="Default",
        fabric=Fabric.COTTON_BLEND,
        fit=Fit.LOOSE,
        matches=lambda reading, ctx: True,
        recommendation=DAILY_USE_RECOMMENDATION,
    ),
)


def make_context(**values) -> ComfortContext:
    """Build a ComfortContext, reporting bad values as invalid-parameter."""
    if isinstance(values.get("activity"), str):
        values["activity"] = Activity.parse(values["activity"])
    try:
        return ComfortContext(**values)
    except ValidationError as error:
        logger.error(f"Invalid comfort context: {error}")
        raise InvalidParameterError(f"Invalid comfort context: {error}") from error


def emotion_score(resp: EmotionResponse) -> float:
    """(positive items - negative items) / 3, in [-1, 1]."""
    return (len(resp.positive_items) - len(resp.negative_items)) / 3


def suggest_garment(
    reading: ComfortReading,
    ctx: ComfortContext,
    emotion: float | None = None,
    rules=RULES,
) -> Suggestion:
    """Suggest a fabric and fit from the first matching rule.

    Args:
        reading (ComfortReading): Heart and respiration rates, optionally a resting heart rate.
        ctx (ComfortContext): Temperature, humidity, activity and wear duration.
        emotion (float, optional): Emotion score in [-1, 1].
        rules (tuple, optional): Ordered rule table replacing the default one.

    Returns:
        Suggestion: Fabric, fit, the matched rule and its rationale.
    """
    if isinstance(ctx, dict):
        ctx = make_context(**ctx)
    if emotion is not None and not -1.0 <= emotion <= 1.0:
        raise InvalidParameterError(f"emotion must lie in [-1, 1], got {emotion}")

    for rule in rules:
        if rule.matches(reading, ctx):
            break
    else:
        logger.error("No rule of the suggestion table matched")
        raise InvalidParameterError("No rule of the suggestion table matched")

    fit = rule.fit
    rationale = f"{rule.description}. Basis: {rule.citation}."
    fit_override = False
    if emotion is not None and emotion <= EMOTION_OVERRIDE_THRESHOLD and rule.fit is Fit.TIGHT:
        fit = Fit.LOOSE
        fit_override = True
        rationale += f" Fit changed from Tight to Loose after a negative emotional response ({emotion:.2f})."

    logger.info(f"Suggestion {rule.fabric.value}/{fit.value} from rule {rule.rule_id}")
    return Suggestion(
        fabric=rule.fabric,
        fit=fit,
        rule_id=rule.rule_id,
        rationale=rationale,
        fit_override=fit_override,
    )
