"""Helicopter catalog and operational-envelope arithmetic."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .errors import ConfigError, DomainError, EnvelopeError
from .quantize import round_half_up

URIEL_MASS_KG = 2080.0

# Minutes of on-site work per ride added to the flight legs.
CYCLE_PRESETS: dict[str, float] = {
    "tables": 20.0,  # every published envelope row satisfies 480 / (flight + 20)
    "prose": 15.0,  # stated harvesting time per ride
    "simulation": 6.0 + 9.0,  # simulated harvest + treatment cycles
}

# Per-ride timber mass caps (kg).
PROSE_SECTION_CAP_KG = 10_000.0


class RoundingMode(str, Enum):
    NEAREST = "nearest"
    FLOOR = "floor"
    CEIL = "ceil"
    RAW = "raw"


@dataclass(frozen=True)
class HelicopterSpec:
    """One airframe. ``acquisition_prices`` maps a condition label to USD."""

    model: str
    payload_kg: float
    mission_radius_km: float
    cruise_kmh: float
    flight_hour_cost: float
    acquisition_prices: dict[str, float] = field(default_factory=dict)
    section_cap_kg: float | None = None

    def __post_init__(self) -> None:
        if self.payload_kg <= 0 or self.cruise_kmh <= 0:
            raise ConfigError(f"{self.model}: payload and cruise speed must be > 0")
        if self.flight_hour_cost <= 0 or self.mission_radius_km <= 0:
            raise ConfigError(f"{self.model}: flight-hour cost and mission radius must be > 0")
        if self.section_cap_kg is not None and self.section_cap_kg <= 0:
            raise ConfigError(f"{self.model}: section_cap_kg must be > 0")
        for label, price in self.acquisition_prices.items():
            if price < 0:
                raise ConfigError(f"{self.model}: negative price for condition {label!r}")

    def price(self, condition: str) -> float:
        try:
            return self.acquisition_prices[condition]
        except KeyError:
            raise ConfigError(
                f"{self.model} has no price for condition {condition!r}; "
                f"known: {', '.join(self.acquisition_prices)}"
            ) from None


@dataclass(frozen=True)
class EnvelopeParams:
    workday_hours: float = 8.0
    working_days_per_year: float = 100.0
    fixed_cycle_min: float = CYCLE_PRESETS["tables"]
    rounding_mode: RoundingMode = RoundingMode.NEAREST

    def __post_init__(self) -> None:
        if self.workday_hours <= 0 or self.working_days_per_year < 0 or self.fixed_cycle_min < 0:
            raise ConfigError("envelope parameters must be positive")
        object.__setattr__(self, "rounding_mode", RoundingMode(self.rounding_mode))

    @property
    def workday_minutes(self) -> float:
        return self.workday_hours * 60.0


class RidesPerDay(NamedTuple):
    raw: float
    rounded: float


def model_key(model: str) -> str:
    """``"CH-47"``, ``"ch47"`` and ``"CH 47"`` all map to ``"CH47"``."""
    return model.replace("-", "").replace(" ", "").replace("_", "").upper()


def default_catalog() -> dict[str, HelicopterSpec]:
    """The three heavy-lift airframes, keyed by :func:`model_key`."""
    helis = [
        HelicopterSpec(
            "CH-47", 12_565, 306, 291, 6_705.0,
            {"new": 39_000_000.0, "used-new": 20_000_000.0, "used-old": 10_000_000.0},
            section_cap_kg=12_000.0,
        ),
        HelicopterSpec("CH-53", 16_329, 200, 270, 34_497.0, {"new": 87_000_000.0}, section_cap_kg=16_000.0),
        HelicopterSpec("MI-26", 20_000, 400, 255, 15_000.0, {"new": 25_000_000.0}, section_cap_kg=20_000.0),
    ]
    return {model_key(h.model): h for h in helis}


def check_range(heli: HelicopterSpec, distance_km: float) -> None:
    if distance_km <= 0:
        raise DomainError("distance_km must be > 0")
    if distance_km > heli.mission_radius_km:
        raise EnvelopeError(
            f"{heli.model}: target at {distance_km:g} km is beyond the "
            f"{heli.mission_radius_km:g} km mission radius"
        )


def round_trip_minutes(heli: HelicopterSpec, distance_km: float) -> float:
    """Out-and-back flight time to a target at ``distance_km``."""
    check_range(heli, distance_km)
    return 2.0 * distance_km / heli.cruise_kmh * 60.0


def _round_rides(raw: float, mode: RoundingMode) -> float:
    if mode is RoundingMode.NEAREST:
        return round_half_up(raw)
    if mode is RoundingMode.FLOOR:
        return float(math.floor(raw))
    if mode is RoundingMode.CEIL:
        return float(math.ceil(raw))
    return raw


def rides_per_day(heli: HelicopterSpec, distance_km: float, params: EnvelopeParams = EnvelopeParams()) -> RidesPerDay:
    """Rides that fit in a workday, both fractional and rounded per ``params.rounding_mode``."""
    cycle = round_trip_minutes(heli, distance_km) + params.fixed_cycle_min
    raw = params.workday_minutes / cycle
    return RidesPerDay(raw, _round_rides(raw, params.rounding_mode))


def annual_flight_cost(heli: HelicopterSpec, params: EnvelopeParams = EnvelopeParams()) -> float:
    return heli.flight_hour_cost * params.workday_hours * params.working_days_per_year


def usable_payload(heli: HelicopterSpec, uriel_mass_kg: float = URIEL_MASS_KG) -> float:
    """Payload left for timber once the harvesting pod is slung."""
    left = heli.payload_kg - uriel_mass_kg
    if left <= 0:
        raise ConfigError(f"{heli.model}: pod mass {uriel_mass_kg:g} kg exceeds payload")
    return left


CATALOG_COLUMNS = [
    "model", "condition", "payload_kg", "mission_radius_km", "cruise_kmh",
    "flight_hour_cost", "acquisition_price", "section_cap_kg",
]


def catalog_rows(catalog: dict[str, HelicopterSpec]) -> list[dict]:
    rows = []
    for heli in catalog.values():
        for condition, price in heli.acquisition_prices.items():
            rows.append({
                "model": heli.model,
                "condition": condition,
                "payload_kg": heli.payload_kg,
                "mission_radius_km": heli.mission_radius_km,
                "cruise_kmh": heli.cruise_kmh,
                "flight_hour_cost": heli.flight_hour_cost,
                "acquisition_price": price,
                "section_cap_kg": heli.section_cap_kg if heli.section_cap_kg is not None else "",
            })
    return rows


def catalog_csv(catalog: dict[str, HelicopterSpec]) -> str:
    """One CSV line per (model, condition) pair."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CATALOG_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(catalog_rows(catalog))
    return buf.getvalue()
