"""Fabric types against comfort parameters, as reported in the textile comfort literature."""

from dataclasses import dataclass
from enum import Enum


class Level(str, Enum):
    LOW = "Low"
    HIGH = "High"


@dataclass(frozen=True)
class KnowledgeRow:
    """One fabric type with the heart-rate level and climate it was observed under.

    Temperature and humidity hold the cell text as printed: "-" where the source
    marks the cell empty, None where it is blank. The reference is the citation
    covering the row (citations span the rows below them until the next one).
    """

    fabric_type: str
    heart_rate: Level
    temperature: str | None
    humidity: str | None
    reference: str


_ROWS = (
    ("Hydrophilic Cotton", Level.LOW, "-", "-", "(Liya et al. 2007)"),
    ("Moisture Management Cotton", Level.HIGH, None, None, "(Liya et al. 2007)"),
    ("100% cotton", Level.LOW, "High", "High", "(Liya et al. 2007)"),
    ("13.7% viscose 86.3% polyester", Level.HIGH, "High", "High", "(Parvari, Aghaei et al. 2015)"),
    ("30.2% cotton, 69.8% polyester", Level.LOW, "High", "Low", "(Parvari, Aghaei et al. 2015)"),
    ("13.7% viscose 86.3% polyester", Level.HIGH, "High", "Low", "(Parvari, Aghaei et al. 2015)"),
    ("100% polyester (low moisture regain)", Level.HIGH, None, None, "(Parvari, Aghaei et al. 2015)"),
    ("Wool + cotton (high moisture regain)", Level.LOW, "30C", "50%", "(Kwon, Kato et al. 1998)"),
    ("100% cotton (moderate moisture regain)", Level.LOW, None, None, "(Kwon, Kato et al. 1998)"),
    ("100% cotton", Level.LOW, None, None, "(Kwon, Kato et al. 1998)"),
    ("65% polyester, 35% cotton", Level.LOW, "-", "-", "(Li, Keighley et al. 1988)"),
    ("100% polyester", Level.HIGH, None, None, "(Li, Keighley et al. 1988)"),
    ("Experimental Clothing- Under Armor", Level.LOW, "-", "-", "(Wickwire, Bishop et al. 2007)"),
    ("Cotton", Level.HIGH, None, None, "(Wickwire, Bishop et al. 2007)"),
)

KNOWLEDGE_ROWS = tuple(KnowledgeRow(*row) for row in _ROWS)


def knowledge_rows() -> tuple[KnowledgeRow, ...]:
    """All rows, in printed order."""
    return KNOWLEDGE_ROWS


def knowledge_rows_for(fabric: str) -> tuple[KnowledgeRow, ...]:
    """Rows whose fabric type contains the given text, case-insensitively."""
    needle = fabric.lower()
    return tuple(row for row in KNOWLEDGE_ROWS if needle in row.fabric_type.lower())
