"""Module containing enums for simpfib."""

from enum import Enum


class CheckStatus(str, Enum):
    """Outcome of a single check record."""

    PASS = "pass"
    FAIL = "fail"


class OutputFormat(str, Enum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"


class TwistKind(str, Enum):
    """Which canonical twisting function to validate."""

    CANONICAL = "canonical"
    LOOP = "loop"


class SpaceKind(str, Enum):
    """Spaces whose homology can be computed from an SES."""

    BAR = "bar"
    TWISTED = "twisted"
