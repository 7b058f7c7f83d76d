"""Timber species registry, Schumacher-Hall stem cubing and green-wood mass."""

from __future__ import annotations

import math
import unicodedata
from dataclasses import dataclass

from .errors import DomainError, ValidityError
from .quantize import truncate

MIN_GREEN_MOISTURE_PCT = 30.0
MAX_DBH_CM = 100.0
MAX_HEIGHT_M = 30.0


@dataclass(frozen=True)
class SpeciesSpec:
    """Allometric, density and market data for one timber species.

    ``beta0..beta2`` are the Schumacher-Hall coefficients for volume in m3
    from DBH in cm and stem height in m. ``specific_gravity_15`` is in
    g/cm3 at 15 % moisture; ``green_moisture_pct`` is on a dry-mass basis.
    """

    name: str
    beta0: float
    beta1: float
    beta2: float
    specific_gravity_15: float
    green_moisture_pct: float
    price_per_m3: float
    trees_per_ha: float

    def __post_init__(self) -> None:
        if self.beta1 <= 0 or self.beta2 <= 0:
            raise ValidityError(f"{self.name}: beta1 and beta2 must be > 0")
        if not 0 < self.specific_gravity_15 < 1.5:
            raise ValidityError(f"{self.name}: specific gravity must lie in (0, 1.5)")
        if self.green_moisture_pct < MIN_GREEN_MOISTURE_PCT:
            raise ValidityError(
                f"{self.name}: green moisture {self.green_moisture_pct}% is below "
                f"the {MIN_GREEN_MOISTURE_PCT:g}% fibre-saturation bound"
            )
        if self.price_per_m3 <= 0:
            raise ValidityError(f"{self.name}: price_per_m3 must be > 0")
        if self.trees_per_ha <= 0:
            raise ValidityError(f"{self.name}: trees_per_ha must be > 0")


@dataclass(frozen=True)
class StemDims:
    """Diameter at breast height (cm) and stem height (m)."""

    dbh_cm: float
    height_m: float

    def __post_init__(self) -> None:
        if self.dbh_cm <= 0 or self.height_m <= 0:
            raise DomainError("stem dimensions must be positive")
        if self.dbh_cm > MAX_DBH_CM:
            raise DomainError(f"dbh_cm={self.dbh_cm} exceeds the {MAX_DBH_CM:g} cm design limit")
        if self.height_m > MAX_HEIGHT_M:
            raise DomainError(f"height_m={self.height_m} exceeds the {MAX_HEIGHT_M:g} m design limit")


DIMS_PRESETS: dict[str, StemDims] = {
    "scenario1": StemDims(80.0, 25.0),
    "scenario2": StemDims(100.0, 30.0),
}


def species_key(name: str) -> str:
    """Normalise a species name for registry lookup: ``"Jatobá"`` -> ``"jatoba"``."""
    stripped = unicodedata.normalize("NFKD", name).encode("ascii", "ignore").decode()
    return stripped.strip().lower().replace(" ", "_").replace("-", "_")


def default_species() -> dict[str, SpeciesSpec]:
    """The three reference species, keyed by :func:`species_key`."""
    seeds = [
        SpeciesSpec("Cedar", -9.99, 2.19, 0.57, 0.53, 100.0, 1059.0, 4.0),
        SpeciesSpec("Ipê", -9.40, 1.94, 1.01, 0.96, 100.0, 1446.0, 3.0),
        SpeciesSpec("Jatobá", -7.21, 1.77, 0.44, 0.96, 100.0, 868.0, 3.0),
    ]
    return {species_key(s.name): s for s in seeds}


def resolve_dims(dims: StemDims | str) -> StemDims:
    if isinstance(dims, StemDims):
        return dims
    try:
        return DIMS_PRESETS[dims]
    except KeyError:
        raise DomainError(f"unknown dims preset {dims!r}; expected one of {sorted(DIMS_PRESETS)}") from None


def stem_volume(species: SpeciesSpec, dims: StemDims, paper_compat: bool = True) -> float:
    """Stem volume in m3 from the log-linear Schumacher-Hall model.

    The error term is taken as zero. With ``paper_compat`` the result is
    truncated to 2 decimals, the precision every downstream figure is
    computed from.
    """
    if dims.dbh_cm <= 0 or dims.height_m <= 0:
        raise DomainError("stem dimensions must be positive")
    log_v = species.beta0 + species.beta1 * math.log(dims.dbh_cm) + species.beta2 * math.log(dims.height_m)
    volume = math.exp(log_v)
    return truncate(volume, 2) if paper_compat else volume


def green_density(species: SpeciesSpec) -> float:
    """Green-wood density in kg/m3: ``1000 * G * (1 + M/100)``."""
    if species.green_moisture_pct < MIN_GREEN_MOISTURE_PCT:
        raise ValidityError("density relation only holds above 30% moisture")
    return 1000.0 * species.specific_gravity_15 * (1.0 + species.green_moisture_pct / 100.0)


def green_mass(species: SpeciesSpec, dims: StemDims, paper_compat: bool = True) -> float:
    """Lift mass in kg of a whole green stem (truncated to whole kg with ``paper_compat``)."""
    mass = stem_volume(species, dims, paper_compat) * green_density(species)
    return float(math.trunc(round(mass, 6))) if paper_compat else mass
