"""Scenario evaluation and cartesian sweeps producing feasibility rows."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .config import Grid, RunConfig, parse_dims
from .errors import EnvelopeError, HeliFeasError
from .finance import CashFlowSeries, FinanceParams, irr, npv, payback
from .fleet import URIEL_MASS_KG, EnvelopeParams, HelicopterSpec, annual_flight_cost, check_range
from .payload import SawmillSpec, annual_revenue
from .species import DIMS_PRESETS, SpeciesSpec, StemDims

FLAG_SIMPLE_FLOW = "simple-flow model"
FLAG_RANGE = "infeasible-by-range"
FLAG_NON_CONVENTIONAL = "non-conventional"
FLAG_PAYBACK_BOUND = "payback-exceeds-bound"


class Verdict(str, Enum):
    VIABLE = "viable"
    NON_VIABLE = "non_viable"


@dataclass(frozen=True)
class Scenario:
    helicopter: HelicopterSpec
    condition: str
    species: SpeciesSpec
    dims: StemDims | str
    distance_km: float
    uriel_unit_price: float = 1_000_000.0
    uriel_mass_kg: float = URIEL_MASS_KG
    finance: FinanceParams = FinanceParams()
    envelope: EnvelopeParams = EnvelopeParams()
    sawmill: SawmillSpec = SawmillSpec()
    paper_compat: bool = True

    @property
    def stem(self) -> StemDims:
        return self.dims if isinstance(self.dims, StemDims) else parse_dims(self.dims)

    @property
    def dims_label(self) -> str:
        if isinstance(self.dims, str):
            return self.dims
        for name, preset in DIMS_PRESETS.items():
            if preset == self.dims:
                return name
        return f"{self.dims.dbh_cm:g}x{self.dims.height_m:g}"

    @property
    def investment(self) -> float:
        """Helicopter + harvesting pod + sawmill."""
        return self.helicopter.price(self.condition) + self.uriel_unit_price + self.sawmill.capex


@dataclass(frozen=True)
class FeasibilityRow:
    helicopter: str
    condition: str
    species: str
    scenario: str
    distance_km: float
    investment: float | None
    annual_revenue: float | None
    annual_cost: float | None
    npv: float | None
    irr: float | None
    payback: int | None
    verdict: Verdict
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def infeasible_by_range(self) -> bool:
        return FLAG_RANGE in self.flags


def _blank_row(scenario: Scenario, flag: str, investment: float | None = None) -> FeasibilityRow:
    return FeasibilityRow(
        scenario.helicopter.model, scenario.condition, scenario.species.name, scenario.dims_label,
        scenario.distance_km, investment, None, None, None, None, None, Verdict.NON_VIABLE, (flag,),
    )


def cash_flows(scenario: Scenario) -> tuple[CashFlowSeries, float, float]:
    """The constant-flow series plus the revenue and cost it was built from."""
    revenue = annual_revenue(
        scenario.helicopter, scenario.species, scenario.stem, scenario.distance_km,
        scenario.envelope, scenario.sawmill, scenario.paper_compat, scenario.uriel_mass_kg,
    )
    cost = annual_flight_cost(scenario.helicopter, scenario.envelope)
    series = CashFlowSeries.constant(scenario.investment, revenue - cost, scenario.finance.horizon_years)
    return series, revenue, cost


def evaluate(scenario: Scenario) -> FeasibilityRow:
    """Investment, flows, NPV at MARR, IRR, payback and verdict for one scenario.

    Targets beyond the mission radius yield a non-viable row flagged
    ``infeasible-by-range`` rather than an exception.
    """
    investment = scenario.investment
    try:
        check_range(scenario.helicopter, scenario.distance_km)
    except EnvelopeError:
        return _blank_row(scenario, FLAG_RANGE, investment)

    fin = scenario.finance
    series, revenue, cost = cash_flows(scenario)
    value = npv(series, fin.marr)
    rate = irr(series)
    years = payback(series, fin)

    flags = [FLAG_SIMPLE_FLOW]
    if not series.conventional:
        flags.append(FLAG_NON_CONVENTIONAL)
    if years is not None and years > fin.max_payback_years:
        flags.append(FLAG_PAYBACK_BOUND)
    viable = (
        rate is not None and rate >= fin.marr
        and years is not None and years <= fin.max_payback_years
    )
    return FeasibilityRow(
        scenario.helicopter.model, scenario.condition, scenario.species.name, scenario.dims_label,
        scenario.distance_km, investment, revenue, cost, value, rate, years,
        Verdict.VIABLE if viable else Verdict.NON_VIABLE, tuple(flags),
    )


def make_scenario(cfg: RunConfig, helicopter: str, condition: str, species: str,
                  dims: StemDims | str, distance_km: float) -> Scenario:
    """Resolve names against ``cfg`` and attach its parameters."""
    heli = cfg.get_helicopter(helicopter)
    heli.price(condition)
    if isinstance(dims, str):
        parse_dims(dims)
    return Scenario(
        heli, condition, cfg.get_species(species), dims, float(distance_km),
        uriel_unit_price=cfg.uriel.unit_price, uriel_mass_kg=cfg.uriel.mass_kg,
        finance=cfg.finance, envelope=cfg.envelope, sawmill=cfg.sawmill,
        paper_compat=cfg.model.paper_compat,
    )


def _grid_cell(cfg: RunConfig, cell) -> FeasibilityRow:
    (model, condition), species, dims, distance = cell
    try:
        return evaluate(make_scenario(cfg, model, condition, species, dims, distance))
    except HeliFeasError as exc:
        heli = cfg.catalog.get(model)
        sp = cfg.species.get(species)
        return FeasibilityRow(
            heli.model if heli else model, condition, sp.name if sp else species, dims, float(distance),
            None, None, None, None, None, None, Verdict.NON_VIABLE, (f"error: {exc}",),
        )


def sweep(grid: Grid, cfg: RunConfig | None = None, max_workers: int | None = None) -> list[FeasibilityRow]:
    """Evaluate the cartesian product of ``grid``.

    Rows come out ordered by helicopter, species, dims, distance. A failing
    cell becomes a non-viable row carrying an ``error:`` flag.
    """
    cfg = cfg or RunConfig()
    cells = list(itertools.product(grid.helicopters, grid.species, grid.dims, grid.distances))
    if max_workers and max_workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda c: _grid_cell(cfg, c), cells))
    return [_grid_cell(cfg, c) for c in cells]
