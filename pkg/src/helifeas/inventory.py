"""Harvest-area inventory, harvest duration and module rotation."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from .errors import ConfigError, DomainError, InfeasibleError
from .quantize import round_half_up
from .species import SpeciesSpec

RESERVE_TOTAL_HA = 647_610.0
DAYS_PER_YEAR = 365.0


class TailMode(str, Enum):
    PAPER_FIXED = "paper_fixed"
    LOGNORMAL_CDF = "lognormal_cdf"


def circle_area_ha(radius_km: float) -> float:
    """Area in hectares of a circle of ``radius_km`` (1 km2 = 100 ha)."""
    if radius_km <= 0:
        raise DomainError("radius_km must be > 0")
    return math.pi * radius_km**2 * 100.0


@dataclass(frozen=True)
class HarvestArea:
    radius_km: float = 10.0
    reserve_total_ha: float = RESERVE_TOTAL_HA

    def __post_init__(self) -> None:
        if self.radius_km <= 0 or self.reserve_total_ha <= 0:
            raise ConfigError("radius_km and reserve_total_ha must be > 0")

    @property
    def area_ha(self) -> float:
        return circle_area_ha(self.radius_km)


@dataclass(frozen=True)
class DbhDistribution:
    """Lognormal DBH-factor distribution and how its upper tail is read.

    ``paper_fixed`` uses ``paper_tail`` verbatim (a density height read off
    a plot); ``lognormal_cdf`` uses the actual exceedance probability of
    ``threshold_factor``.
    """

    sigma: float = 0.5
    mu: float = 0.0
    tail_mode: TailMode = TailMode.PAPER_FIXED
    paper_tail: float = 0.125
    threshold_factor: float = 2.0

    def __post_init__(self) -> None:
        if self.sigma <= 0:
            raise ConfigError("sigma must be > 0")
        if not 0 < self.paper_tail < 1:
            raise ConfigError("paper_tail must lie in (0, 1)")
        if self.threshold_factor <= 0:
            raise ConfigError("threshold_factor must be > 0")
        object.__setattr__(self, "tail_mode", TailMode(self.tail_mode))


def lognormal_tail(dist: DbhDistribution) -> float:
    """Fraction of stems in the harvestable DBH tail."""
    if dist.tail_mode is TailMode.PAPER_FIXED:
        return dist.paper_tail
    z = (math.log(dist.threshold_factor) - dist.mu) / dist.sigma
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def harvestable_count(area: HarvestArea, species: SpeciesSpec, dist: DbhDistribution) -> int:
    return math.floor(round(area.area_ha * species.trees_per_ha * lognormal_tail(dist), 9))


def harvest_duration_days(count: int, rides_per_day: float) -> int:
    """Days to lift ``count`` loads at ``rides_per_day``, rounded to the nearest day."""
    if count == 0:
        return 0
    if rides_per_day < 1:
        raise InfeasibleError(f"{rides_per_day} rides per day cannot clear any harvest")
    return int(round_half_up(count / rides_per_day))


@dataclass(frozen=True)
class RotationPlan:
    module_count: int
    module_years: int
    return_cycle_years: int
    module_years_exact: float | None = None


def module_years_from_durations(durations_days: Iterable[float]) -> tuple[int, float]:
    """Years to clear one module when species are harvested back to back."""
    exact = sum(durations_days) / DAYS_PER_YEAR
    return int(round_half_up(exact)), exact


def rotation_plan(reserve_ha: float, module_area_ha: float, module_years: int | None = None,
                  durations_days: Iterable[float] | None = None) -> RotationPlan:
    """Module count and return cycle for a reserve cut into equal modules.

    Either ``module_years`` or the per-species ``durations_days`` must be given.
    """
    if module_area_ha <= 0 or module_area_ha > reserve_ha:
        raise DomainError("module area must be positive and no larger than the reserve")
    exact = None
    if module_years is None:
        if durations_days is None:
            raise DomainError("need module_years or durations_days")
        module_years, exact = module_years_from_durations(durations_days)
    count = math.floor(reserve_ha / module_area_ha)
    return RotationPlan(count, module_years, count * module_years, exact)
