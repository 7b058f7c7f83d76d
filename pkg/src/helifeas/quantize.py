"""Truncation and rounding helpers for reference-compatible figures.

Published figures are cut, not rounded, at each intermediate: 10.5086 m3
appears as 10.50, 13,651.2 kg as 13,651. Scaling is followed by a 6-dp
round so that float fuzz such as 4468.979999... does not lose a cent.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal


def truncate(value: float, places: int = 2) -> float:
    """Drop digits beyond ``places`` decimals, toward zero."""
    scale = 10**places
    return math.trunc(round(value * scale, 6)) / scale


def round_half_up(value: float, places: int = 0) -> float:
    """Commercial rounding (0.5 away from zero), unlike Python's banker's ``round``."""
    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def money(value: float) -> float:
    """Strip float fuzz from an amount that is already an exact number of cents."""
    return round(value, 2)
