"""
Study statistics over subjects x garment-condition tables.

Descriptive statistics, Pearson correlation, paired and equal-variance Student t-tests and
box-whisker summaries, assembled by `analyze_study` into a report with one verdict per comparison.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import special

from comfort_vitals.exceptions import (
    ComfortVitalsException,
    DegenerateInputError,
    InsufficientDataError,
    InvalidParameterError,
)
from comfort_vitals.logger import logger


DEFAULT_ALPHA = 0.05
# Differences spread by less than this (relative to the data scale) count as identical.
DEGENERATE_RTOL = 1e-12


class Fabric(str, Enum):
    COTTON_BLEND = "CottonBlend"
    POLYESTER_BLEND = "PolyesterBlend"

    @property
    def composition(self) -> str:
        if self is Fabric.COTTON_BLEND:
            return "90% cotton + 10% polyester"
        return "90% polyester + 10% spandex"


class Fit(str, Enum):
    TIGHT = "Tight"
    LOOSE = "Loose"


class GarmentCondition(str, Enum):
    """The four single jersey knit test garments."""

    PLF = "PLF"
    PTF = "PTF"
    CLF = "CLF"
    CTF = "CTF"

    @property
    def fabric(self) -> Fabric:
        return Fabric.POLYESTER_BLEND if self.value[0] == "P" else Fabric.COTTON_BLEND

    @property
    def fit(self) -> Fit:
        return Fit.TIGHT if self.value[1] == "T" else Fit.LOOSE

    @classmethod
    def of(cls, fabric: Fabric, fit: Fit) -> "GarmentCondition":
        return cls(f"{'P' if fabric is Fabric.POLYESTER_BLEND else 'C'}{fit.value[0]}F")


class Measure(str, Enum):
    HEART_RATE = "hr"
    RESPIRATION_RATE = "rr"

    @property
    def long_name(self) -> str:
        return "HeartRate" if self is Measure.HEART_RATE else "RespirationRate"


COMPARISONS = (
    (GarmentCondition.PLF, GarmentCondition.PTF),
    (GarmentCondition.CLF, GarmentCondition.CTF),
    (GarmentCondition.PLF, GarmentCondition.CLF),
    (GarmentCondition.PTF, GarmentCondition.CTF),
)


@dataclass(frozen=True)
class StudyTable:
    """Per-subject rates under each of the four garment conditions.

    Args:
        subject_ids (tuple): Subject identifiers, one per row.
        columns (dict): GarmentCondition -> per-subject rates (per minute).
        measure (Measure): What the rates are.
    """

    subject_ids: tuple
    columns: dict
    measure: Measure

    def __post_init__(self):
        columns = {GarmentCondition(code): tuple(float(v) for v in values) for code, values in self.columns.items()}
        missing = [c.value for c in GarmentCondition if c not in columns]
        if missing:
            raise InvalidParameterError(f"StudyTable is missing condition columns {missing}")

        lengths = {len(values) for values in columns.values()}
        n = len(self.subject_ids)
        if lengths != {n}:
            raise InvalidParameterError(
                f"All columns must have one value per subject ({n}), got lengths {sorted(lengths)}"
            )
        if n < 2:
            raise InsufficientDataError(f"StudyTable needs at least 2 subjects, got {n}")
        for code, values in columns.items():
            if not all(math.isfinite(v) and v > 0 for v in values):
                raise InvalidParameterError(f"Column {code.value} must hold finite positive rates")

        object.__setattr__(self, "subject_ids", tuple(str(s) for s in self.subject_ids))
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "measure", Measure(self.measure))

    def column(self, condition: GarmentCondition) -> np.ndarray:
        return np.array(self.columns[GarmentCondition(condition)])


class Descriptive(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    std_dev: float
    variance: float


class PairedTestResult(BaseModel):
    """Paired Student t-test with the Pearson correlation of the pair.

    pearson_r is None when either column has zero variance.
    """

    model_config = ConfigDict(frozen=True)

    pearson_r: float | None = Field(default=None, ge=-1.0, le=1.0)
    t_stat: float
    df: int = Field(ge=1)
    p_one_tail: float = Field(ge=0.0, le=1.0)


class TwoSampleTestResult(BaseModel):
    """Student t-test for two samples assuming equal variance."""

    model_config = ConfigDict(frozen=True)

    t_stat: float
    df: int = Field(ge=1)
    p_one_tail: float = Field(ge=0.0, le=1.0)


class BoxSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    min: float
    q1: float
    median: float
    q3: float
    max: float
    iqr: float


class Comparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    first: GarmentCondition
    second: GarmentCondition
    paired: PairedTestResult | None = None
    equal_variance: TwoSampleTestResult | None = None
    significant: bool | None = None
    verdict: str
    error: str | None = None

    @property
    def label(self) -> str:
        return f"{self.first.value}-{self.second.value}"


class StudyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    measure: Measure
    n_subjects: int
    alpha: float
    descriptive: dict[GarmentCondition, Descriptive]
    box: dict[GarmentCondition, BoxSummary]
    comparisons: list[Comparison]


def _as_array(values, name="column") -> np.ndarray:
    array = np.asarray(values, dtype=float).reshape(-1)
    if not np.all(np.isfinite(array)):
        raise InvalidParameterError(f"{name} must hold finite values")
    return array


def _paired_arrays(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = _as_array(x, "x")
    y = _as_array(y, "y")
    if x.size != y.size:
        raise InvalidParameterError(f"Sequences must have equal lengths, got {x.size} and {y.size}")
    if x.size < 2:
        raise InsufficientDataError(f"Need at least 2 pairs, got {x.size}")
    return x, y


def descriptive(column) -> Descriptive:
    """Mean, sample standard deviation and sample variance (divisor n - 1)."""
    values = _as_array(column)
    if values.size < 2:
        raise InsufficientDataError(f"Need at least 2 values, got {values.size}")
    variance = float(np.var(values, ddof=1))
    return Descriptive(mean=float(np.mean(values)), std_dev=math.sqrt(variance), variance=variance)


def pearson(x, y) -> float:
    """Sample Pearson product-moment correlation."""
    x, y = _paired_arrays(x, y)
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise DegenerateInputError("Pearson correlation is undefined for a zero-variance sequence")
    dx = x - np.mean(x)
    dy = y - np.mean(y)
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    r = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def t_tail_probability(t: float, df: int) -> float:
    """P(T >= |t|) for Student's t with df degrees of freedom.

    Uses the regularized incomplete beta function, and the arctangent closed
    form for df = 1.
    """
    if df < 1:
        raise InvalidParameterError(f"df must be >= 1, got {df}")
    t = abs(float(t))
    if df == 1:
        return 0.5 - math.atan(t) / math.pi
    return float(0.5 * special.betainc(df / 2.0, 0.5, df / (df + t * t)))


def paired_t_test(x, y) -> PairedTestResult:
    """Paired Student t-test on x - y, with the one-tail p beyond |t|.

    Args:
        x: First condition, one value per subject.
        y: Second condition, same subjects in the same order.

    Returns:
        PairedTestResult: Correlation, t statistic, degrees of freedom and one-tail p.
    """
    x, y = _paired_arrays(x, y)
    d = x - y
    n = d.size
    scale = max(1.0, float(np.max(np.abs(x))), float(np.max(np.abs(y))))
    if float(np.ptp(d)) <= DEGENERATE_RTOL * scale:
        raise DegenerateInputError("Paired differences are all identical")

    sd = float(np.std(d, ddof=1))
    t_stat = float(np.mean(d)) / (sd / math.sqrt(n))
    df = n - 1
    pearson_r = None if np.ptp(x) == 0 or np.ptp(y) == 0 else pearson(x, y)
    return PairedTestResult(
        pearson_r=pearson_r,
        t_stat=t_stat,
        df=df,
        p_one_tail=t_tail_probability(t_stat, df),
    )


def two_sample_t_test(x, y) -> TwoSampleTestResult:
    """Student t-test for two independent samples with pooled variance."""
    x = _as_array(x, "x")
    y = _as_array(y, "y")
    if x.size < 2 or y.size < 2:
        raise InsufficientDataError(f"Need at least 2 values per sample, got {x.size} and {y.size}")

    df = x.size + y.size - 2
    pooled = (np.var(x, ddof=1) * (x.size - 1) + np.var(y, ddof=1) * (y.size - 1)) / df
    if pooled == 0:
        raise DegenerateInputError("Both samples have zero variance")

    t_stat = float((np.mean(x) - np.mean(y)) / math.sqrt(pooled * (1 / x.size + 1 / y.size)))
    return TwoSampleTestResult(t_stat=t_stat, df=df, p_one_tail=t_tail_probability(t_stat, df))


def box_summary(column) -> BoxSummary:
    """Five-number summary with linearly interpolated quartiles."""
    values = _as_array(column)
    if values.size < 1:
        raise InsufficientDataError("Need at least 1 value")
    q1, median, q3 = np.percentile(values, [25, 50, 75], method="linear")
    return BoxSummary(
        min=float(values.min()),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        max=float(values.max()),
        iqr=float(q3 - q1),
    )


def _compare(table: StudyTable, first, second, alpha: float) -> Comparison:
    x = table.column(first)
    y = table.column(second)
    try:
        paired = paired_t_test(x, y)
        equal_variance = two_sample_t_test(x, y)
    except ComfortVitalsException as error:
        logger.warning(f"{first.value}-{second.value}: {error}")
        return Comparison(
            first=first, second=second, verdict="not testable", error=error.code
        )

    significant = paired.p_one_tail < alpha
    return Comparison(
        first=first,
        second=second,
        paired=paired,
        equal_variance=equal_variance,
        significant=significant,
        verdict="significant difference" if significant else "no significant difference",
    )


def analyze_study(table: StudyTable, alpha: float = DEFAULT_ALPHA) -> StudyReport:
    """Descriptive statistics, box summaries and the four paired comparisons.

    Args:
        table (StudyTable): The study data.
        alpha (float): Significance level for the verdicts.

    Returns:
        StudyReport: The full report.
    """
    if not 0 < alpha < 1:
        raise InvalidParameterError(f"alpha must lie in (0, 1), got {alpha}")

    logger.info(f"Starting study analysis of {len(table.subject_ids)} subjects ({table.measure.long_name})...")
    report = StudyReport(
        measure=table.measure,
        n_subjects=len(table.subject_ids),
        alpha=alpha,
        descriptive={c: descriptive(table.column(c)) for c in GarmentCondition},
        box={c: box_summary(table.column(c)) for c in GarmentCondition},
        comparisons=[_compare(table, first, second, alpha) for first, second in COMPARISONS],
    )
    logger.info("Study analysis finished!")
    return report
