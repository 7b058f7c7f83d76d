"""Per-ride timber economics: section caps, reduction factors and boards billing.

A stem heavier than the per-ride cap is cut into sections and each ride
carries one section. The reduction factor is the fraction of the stem
volume lifted per ride; billing is sawn-board value minus sawmill cost
for that volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError
from .fleet import URIEL_MASS_KG, EnvelopeParams, HelicopterSpec, rides_per_day, usable_payload
from .quantize import money, truncate
from .species import SpeciesSpec, StemDims, green_mass, stem_volume


@dataclass(frozen=True)
class SawmillSpec:
    capex: float = 94_340.0
    processing_cost_per_m3: float = 149.0

    def __post_init__(self) -> None:
        if self.capex < 0 or self.processing_cost_per_m3 < 0:
            raise ConfigError("sawmill costs must be >= 0")


@dataclass(frozen=True)
class LogEconomics:
    full_volume_m3: float
    full_green_mass_kg: float
    reduction_factor: float
    ride_volume_m3: float
    sawmill_cost: float
    gross_revenue: float
    boards_billing: float

    @property
    def sections_per_stem(self) -> int:
        """Rides needed to clear one whole stem."""
        if self.ride_volume_m3 <= 0:
            return 0
        return math.ceil(round(self.full_volume_m3 / self.ride_volume_m3, 9))


def section_cap_mass(heli: HelicopterSpec, uriel_mass_kg: float = URIEL_MASS_KG) -> float:
    """Timber mass one ride may carry; falls back to the usable payload."""
    if heli.section_cap_kg is not None:
        return heli.section_cap_kg
    return usable_payload(heli, uriel_mass_kg)


def _exact_factor(heli: HelicopterSpec, species: SpeciesSpec, dims: StemDims,
                  paper_compat: bool, uriel_mass_kg: float) -> float:
    mass = green_mass(species, dims, paper_compat)
    if mass <= 0:
        return 1.0
    return min(1.0, section_cap_mass(heli, uriel_mass_kg) / mass)


def reduction_factor(heli: HelicopterSpec, species: SpeciesSpec, dims: StemDims,
                     paper_compat: bool = True, uriel_mass_kg: float = URIEL_MASS_KG) -> float:
    """Fraction of the stem carried per ride (3-dp truncated with ``paper_compat``).

    Computed as cap over green mass, which equals cap/density over volume.
    """
    factor = _exact_factor(heli, species, dims, paper_compat, uriel_mass_kg)
    return truncate(factor, 3) if paper_compat else factor


def per_ride_billing(heli: HelicopterSpec, species: SpeciesSpec, dims: StemDims,
                     sawmill: SawmillSpec = SawmillSpec(), paper_compat: bool = True,
                     uriel_mass_kg: float = URIEL_MASS_KG) -> LogEconomics:
    """Volume, cost and revenue of a single ride.

    With ``paper_compat`` the ride volume uses the unrounded factor while
    every monetary figure is truncated to the cent; billing is truncated
    from ``volume * margin`` directly, so it can differ from
    ``gross - cost`` by one cent.
    """
    exact = _exact_factor(heli, species, dims, paper_compat, uriel_mass_kg)
    return _economics(species, dims, exact, sawmill, paper_compat)


def full_stem_billing(species: SpeciesSpec, dims: StemDims, sawmill: SawmillSpec = SawmillSpec(),
                      paper_compat: bool = True) -> LogEconomics:
    """Economics of a whole stem with no payload limit."""
    return _economics(species, dims, 1.0, sawmill, paper_compat)


def _economics(species: SpeciesSpec, dims: StemDims, exact_factor: float,
               sawmill: SawmillSpec, paper_compat: bool) -> LogEconomics:
    volume = stem_volume(species, dims, paper_compat)
    mass = green_mass(species, dims, paper_compat)
    ride_volume = exact_factor * volume
    unit_cost = sawmill.processing_cost_per_m3
    if paper_compat:
        cost = truncate(ride_volume * unit_cost, 2)
        gross = truncate(ride_volume * species.price_per_m3, 2)
        billing = truncate(ride_volume * (species.price_per_m3 - unit_cost), 2)
        factor = truncate(exact_factor, 3)
    else:
        cost = ride_volume * unit_cost
        gross = ride_volume * species.price_per_m3
        billing = gross - cost
        factor = exact_factor
    return LogEconomics(volume, mass, factor, ride_volume, cost, gross, billing)


def annual_revenue(heli: HelicopterSpec, species: SpeciesSpec, dims: StemDims, distance_km: float,
                   params: EnvelopeParams = EnvelopeParams(), sawmill: SawmillSpec = SawmillSpec(),
                   paper_compat: bool = True, uriel_mass_kg: float = URIEL_MASS_KG) -> float:
    """Yearly boards billing: one billed section per ride."""
    rides = rides_per_day(heli, distance_km, params).rounded
    billing = per_ride_billing(heli, species, dims, sawmill, paper_compat, uriel_mass_kg).boards_billing
    total = billing * rides * params.working_days_per_year
    return money(total) if paper_compat else total
