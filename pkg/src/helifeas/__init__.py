"""Techno-economic feasibility engine for helicopter-borne selective logging."""

from .errors import (
    ConfigError,
    DomainError,
    EnvelopeError,
    HeliFeasError,
    InfeasibleError,
    ValidityError,
)
from .finance import CashFlowSeries, FinanceParams, PaybackMode, irr, npv, payback, production_price
from .fleet import (
    EnvelopeParams,
    HelicopterSpec,
    RoundingMode,
    annual_flight_cost,
    default_catalog,
    rides_per_day,
    round_trip_minutes,
    usable_payload,
)
from .inventory import (
    DbhDistribution,
    HarvestArea,
    TailMode,
    circle_area_ha,
    harvest_duration_days,
    harvestable_count,
    lognormal_tail,
    rotation_plan,
)
from .payload import SawmillSpec, annual_revenue, per_ride_billing, reduction_factor, section_cap_mass
from .species import SpeciesSpec, StemDims, default_species, green_density, green_mass, stem_volume
from .config import Grid, RunConfig
from .scenario import FeasibilityRow, Scenario, Verdict, evaluate, make_scenario, sweep

__version__ = "0.1.0"
