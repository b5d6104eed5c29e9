"""Duration strings and the day-based calendar conventions used everywhere.

All analysis code works in integer days. Human-facing inputs (CLI flags,
config fields) accept strings like "10y", "18m", "100d", a bare integer
(days), or "inf" for an unbounded threshold.
"""

from __future__ import annotations

import math

from .errors import ValidationError

DAYS_PER_YEAR = 365
DAYS_PER_MONTH = 30.417

_UNBOUNDED_TOKENS = frozenset({"inf", "unbounded", "none"})
_UNIT_DAYS = {"d": 1.0, "m": DAYS_PER_MONTH, "y": float(DAYS_PER_YEAR)}


def parse_duration(text: str | int | None) -> int | None:
    """Parse a duration into whole days; ``None`` means no bound.

    Fractional day totals round down, so "18m" is floor(18 * 30.417) = 547.
    Raises ValidationError for anything unparseable or negative.
    """
    if text is None:
        return None
    if isinstance(text, int):
        value, unit = float(text), "d"
    else:
        s = text.strip().lower()
        if not s:
            raise ValidationError("empty duration")
        if s in _UNBOUNDED_TOKENS:
            return None
        if s[-1] in _UNIT_DAYS:
            number, unit = s[:-1], s[-1]
        else:
            number, unit = s, "d"
        try:
            value = float(number)
        except ValueError:
            raise ValidationError(f"unparseable duration {text!r}") from None
    if not math.isfinite(value) or value < 0:
        raise ValidationError(f"duration must be finite and non-negative, got {text!r}")
    return math.floor(value * _UNIT_DAYS[unit])


def format_duration(days: int | None) -> str:
    """Compact inverse of parse_duration, preferring exact year multiples."""
    if days is None:
        return "inf"
    if days > 0 and days % DAYS_PER_YEAR == 0:
        return f"{days // DAYS_PER_YEAR}y"
    return f"{days}d"
