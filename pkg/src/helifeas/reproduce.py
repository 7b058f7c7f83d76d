"""Recompute the published tables and list every cell that disagrees.

Each published figure is compared with the engine value at a fixed
tolerance; misses become :class:`Discrepancy` entries annotated with the
modelling decision or source inconsistency responsible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import published as pub
from .config import RunConfig, parse_dims
from .fleet import (
    CATALOG_COLUMNS,
    annual_flight_cost,
    catalog_rows,
    rides_per_day,
    round_trip_minutes,
    usable_payload,
)
from .inventory import (
    DbhDistribution,
    HarvestArea,
    TailMode,
    harvest_duration_days,
    harvestable_count,
    lognormal_tail,
    rotation_plan,
)
from .payload import annual_revenue, full_stem_billing, per_ride_billing
from .report import Table, feasibility_table
from .scenario import Verdict, evaluate, make_scenario
from .quantize import truncate
from .species import DIMS_PRESETS

TOL_ENVELOPE = 0.01
TOL_VOLUME = 0.01
TOL_MASS = 3.0
TOL_FACTOR = 0.001
TOL_CELL_USD = 0.25
TOL_NPV_REL = 0.01
TOL_IRR_PP = 2.0

NOTE_ROUNDING = "rides rounded half-up to nearest; the printed integer disagrees for this row"
NOTE_REUSED_BILLING = (
    "published row reuses the CH-47 per-log billing; engine applies this helicopter's own section cap"
)
NOTE_ARITHMETIC = "published total is not billing x rides x working days"
NOTE_CONSTANT = "published revenue stays constant across distance although rides per day fall"
NOTE_CENTS = "per-log billing differs by cents, multiplied through rides x working days"
NOTE_SIMPLE_FLOW = (
    "NPV not reproducible with flows = revenue - flight cost; the remaining cost lines are unpublished"
)
NOTE_PAYBACK = "payback taken as first year whose cumulative undiscounted flow covers the investment"
NOTE_OTHER_SCENARIO = "published revenue belongs to the other stem scenario"
NOTE_REVENUE_TABLE = "published revenue copied from a revenue-table row that is itself flagged"
NOTE_OTHER_DISTANCE = "published revenue is the figure for another target distance"
NOTE_REVENUE_UNMATCHED = "published revenue matches no revenue-table row"
NOTE_OMITTED_ROW = "engine reduces this load but the published table has no such row"
NOTE_VERDICT = "engine verdict differs from the one implied by the printed IRR/payback"


@dataclass(frozen=True)
class Discrepancy:
    table: str
    row: str
    column: str
    engine: object
    published: object
    note: str


@dataclass
class TableBundle:
    tables: dict[str, Table] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def add(self, table: Table) -> None:
        self.tables[table.name] = table

    def flag(self, table: str, row: str, column: str, engine, published, note: str) -> None:
        self.discrepancies.append(Discrepancy(table, row, column, engine, published, note))

    def for_table(self, name: str) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.table == name]

    def discrepancies_markdown(self) -> str:
        lines = [
            "# Discrepancies between engine and published tables",
            "",
            f"{len(self.discrepancies)} cells differ beyond tolerance.",
            "",
            "| table | row | column | engine | published | note |",
            "|---|---|---|---|---|---|",
        ]
        for d in self.discrepancies:
            lines.append(
                f"| {d.table} | {d.row} | {d.column} | {_show(d.engine)} | {_show(d.published)} | {d.note} |"
            )
        return "\n".join(lines) + "\n"


def _show(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:,.4f}".rstrip("0").rstrip(".") if abs(value) < 10 else f"{value:,.2f}"
    return str(getattr(value, "value", value))


def _label(*parts) -> str:
    return " / ".join(str(p) for p in parts)


# ------------------------------------------------------------------ pieces

def catalog_table(cfg: RunConfig) -> Table:
    kinds = ["text", "text", "g", "g", "g", "usd", "usd", "g"]
    rows = [[r[c] if r[c] != "" else None for c in CATALOG_COLUMNS] for r in catalog_rows(cfg.catalog)]
    return Table("table22", "Helicopter catalog", list(zip(CATALOG_COLUMNS, kinds)), rows)


def envelope_table(cfg: RunConfig, bundle: TableBundle) -> Table:
    env = cfg.envelope
    table = Table(
        "table23", "Operational envelope",
        [("helicopter", "text"), ("distance_km", "g"), ("flight_min", "2dp"),
         ("rides_raw", "2dp"), ("rides_rounded", "g"), ("rounding_mode", "text")],
        notes=[f"fixed cycle {env.fixed_cycle_min:g} min, workday {env.workday_hours:g} h, "
               f"rounding {env.rounding_mode.value}"],
    )
    for ref in pub.ENVELOPE:
        heli = cfg.get_helicopter(ref.helicopter)
        flight = round_trip_minutes(heli, ref.distance_km)
        rides = rides_per_day(heli, ref.distance_km, env)
        shown = (truncate(flight, 2), truncate(rides.raw, 2)) if cfg.model.paper_compat else (flight, rides.raw)
        table.rows.append([heli.model, ref.distance_km, *shown, rides.rounded, env.rounding_mode])
        row = _label(heli.model, f"{ref.distance_km:g} km")
        if abs(flight - ref.flight_min) > TOL_ENVELOPE:
            bundle.flag("table23", row, "flight_min", flight, ref.flight_min, "flight time outside 0.01 min")
        if abs(rides.raw - ref.rides_raw) > TOL_ENVELOPE:
            bundle.flag("table23", row, "rides_raw", rides.raw, ref.rides_raw, "raw rides outside 0.01")
        if rides.rounded != ref.rides_rounded:
            bundle.flag("table23", row, "rides_rounded", rides.rounded, ref.rides_rounded, NOTE_ROUNDING)
    return table


def operating_cost_table(cfg: RunConfig, bundle: TableBundle) -> Table:
    env = cfg.envelope
    table = Table(
        "table24", "Operating cost per year",
        [("helicopter", "text"), ("usable_payload_kg", "g"), ("cost_per_day", "usd"), ("cost_per_year", "usd")],
    )
    for ref in pub.OPERATING_COST:
        heli = cfg.get_helicopter(ref.helicopter)
        payload = usable_payload(heli, cfg.uriel.mass_kg)
        per_day = heli.flight_hour_cost * env.workday_hours
        per_year = annual_flight_cost(heli, env)
        table.rows.append([heli.model, payload, per_day, per_year])
        for col, mine, theirs in [("usable_payload_kg", payload, ref.usable_payload_kg),
                                  ("cost_per_day", per_day, ref.cost_per_day),
                                  ("cost_per_year", per_year, ref.cost_per_year)]:
            if abs(mine - theirs) > 0.005:
                bundle.flag("table24", heli.model, col, mine, theirs, "operating-cost arithmetic")
    return table


def full_log_table(cfg: RunConfig, preset: str, name: str, bundle: TableBundle) -> Table:
    dims = DIMS_PRESETS[preset]
    compat = cfg.model.paper_compat
    table = Table(
        name, f"Per-log revenue, whole stem ({preset})",
        [("species", "text"), ("volume_m3", "2dp"), ("price_per_m3", "usd"), ("green_mass_kg", "g"),
         ("sawmill_cost", "usd"), ("gross_revenue", "usd"), ("boards_billing", "usd")],
    )
    for ref in pub.FULL_LOG[preset]:
        sp = cfg.get_species(ref.species)
        eco = full_stem_billing(sp, dims, cfg.sawmill, compat)
        table.rows.append([sp.name, eco.full_volume_m3, sp.price_per_m3, eco.full_green_mass_kg,
                           eco.sawmill_cost, eco.gross_revenue, eco.boards_billing])
        checks = [("volume_m3", eco.full_volume_m3, ref.volume_m3, TOL_VOLUME),
                  ("price_per_m3", sp.price_per_m3, ref.price_per_m3, 0.005),
                  ("green_mass_kg", eco.full_green_mass_kg, ref.green_mass_kg, TOL_MASS),
                  ("sawmill_cost", eco.sawmill_cost, ref.sawmill_cost, TOL_CELL_USD),
                  ("gross_revenue", eco.gross_revenue, ref.gross_revenue, TOL_CELL_USD),
                  ("boards_billing", eco.boards_billing, ref.boards_billing, TOL_CELL_USD)]
        for col, mine, theirs, tol in checks:
            if abs(mine - theirs) > tol + 1e-9:
                bundle.flag(name, sp.name, col, mine, theirs, "per-log arithmetic")
    return table


def reduced_log_table(cfg: RunConfig, preset: str, name: str, bundle: TableBundle) -> Table:
    dims = DIMS_PRESETS[preset]
    compat = cfg.model.paper_compat
    table = Table(
        name, f"Per-ride revenue with reduction factor ({preset})",
        [("species", "text"), ("helicopter", "text"), ("reduction_factor", "3dp"),
         ("sawmill_cost", "usd"), ("gross_revenue", "usd"), ("boards_billing", "usd")],
    )
    refs = {(r.species, r.helicopter): r for r in pub.REDUCED_LOG[preset]}
    for heli_key, heli in cfg.catalog.items():
        for sp_key, sp in cfg.species.items():
            eco = per_ride_billing(heli, sp, dims, cfg.sawmill, compat, cfg.uriel.mass_kg)
            if eco.ride_volume_m3 >= eco.full_volume_m3:
                continue
            table.rows.append([sp.name, heli.model, eco.reduction_factor,
                               eco.sawmill_cost, eco.gross_revenue, eco.boards_billing])
            row = _label(sp.name, heli.model)
            ref = refs.pop((sp_key, heli_key), None)
            if ref is None:
                bundle.flag(name, row, "row", f"factor {eco.reduction_factor:.3f}", None, NOTE_OMITTED_ROW)
                continue
            checks = [("reduction_factor", eco.reduction_factor, ref.reduction_factor, TOL_FACTOR),
                      ("sawmill_cost", eco.sawmill_cost, ref.sawmill_cost, TOL_CELL_USD),
                      ("gross_revenue", eco.gross_revenue, ref.gross_revenue, TOL_CELL_USD),
                      ("boards_billing", eco.boards_billing, ref.boards_billing, TOL_CELL_USD)]
            for col, mine, theirs, tol in checks:
                if abs(mine - theirs) > tol + 1e-9:
                    bundle.flag(name, row, col, mine, theirs, "per-log arithmetic")
    for (sp_key, heli_key), ref in refs.items():
        bundle.flag(name, _label(sp_key, heli_key), "row", None, ref.reduction_factor,
                    "published reduction where the engine finds the stem within the cap")
    return table


def revenue_table(cfg: RunConfig, preset: str, name: str, bundle: TableBundle) -> Table:
    dims = DIMS_PRESETS[preset]
    env = cfg.envelope
    compat = cfg.model.paper_compat
    days = env.working_days_per_year
    table = Table(
        name, f"Annual revenue ({preset})",
        [("helicopter", "text"), ("distance_km", "g"), ("species", "text"),
         ("billing_per_ride", "usd"), ("rides_per_day", "g"), ("annual_revenue", "usd")],
    )
    published_by_distance = {}
    for ref in pub.ANNUAL_REVENUE[preset]:
        published_by_distance.setdefault((ref.helicopter, ref.species), []).append(ref)

    for ref in pub.ANNUAL_REVENUE[preset]:
        heli = cfg.get_helicopter(ref.helicopter)
        sp = cfg.get_species(ref.species)
        billing = per_ride_billing(heli, sp, dims, cfg.sawmill, compat, cfg.uriel.mass_kg).boards_billing
        rides = rides_per_day(heli, ref.distance_km, env).rounded
        total = annual_revenue(heli, sp, dims, ref.distance_km, env, cfg.sawmill, compat, cfg.uriel.mass_kg)
        table.rows.append([heli.model, ref.distance_km, sp.name, billing, rides, total])

        row = _label(heli.model, f"{ref.distance_km:g} km", sp.name)
        if abs(billing - ref.billing) > TOL_CELL_USD:
            bundle.flag(name, row, "billing_per_ride", billing, ref.billing, NOTE_REUSED_BILLING)
        if rides != ref.rides:
            bundle.flag(name, row, "rides_per_day", rides, ref.rides, NOTE_ROUNDING)
        if abs(total - ref.total) < 0.005:
            continue
        arithmetic_ok = abs(ref.billing * ref.rides * days - ref.total) < 0.005
        if not arithmetic_ok:
            series = published_by_distance[(ref.helicopter, ref.species)]
            constant = len({r.total for r in series}) == 1 and len({r.rides for r in series}) > 1
            note = NOTE_CONSTANT if constant else NOTE_ARITHMETIC
        elif abs(billing - ref.billing) > TOL_CELL_USD:
            note = NOTE_REUSED_BILLING
        else:
            note = NOTE_CENTS
        bundle.flag(name, row, "annual_revenue", total, ref.total, note)
    return table


def _revenue_note(ref: pub.FeasibilityRef) -> str:
    same = pub.ANNUAL_REVENUE[ref.dims]
    other = pub.ANNUAL_REVENUE["scenario2" if ref.dims == "scenario1" else "scenario1"]

    def matches(rows, any_distance=False):
        return any(r.helicopter == ref.helicopter and r.species == ref.species
                   and (any_distance or r.distance_km == ref.distance_km)
                   and abs(r.total - ref.revenue) < 0.005
                   for r in rows)

    if matches(same):
        return NOTE_REVENUE_TABLE
    if matches(other):
        return NOTE_OTHER_SCENARIO
    if matches(same, any_distance=True):
        return NOTE_OTHER_DISTANCE
    return NOTE_REVENUE_UNMATCHED


def feasibility_tables(cfg: RunConfig, bundle: TableBundle) -> list[Table]:
    tables: dict[str, list] = {}
    for ref in pub.FEASIBILITY:
        scenario = make_scenario(cfg, ref.helicopter, ref.condition, ref.species, ref.dims, ref.distance_km)
        row = evaluate(scenario)
        tables.setdefault(ref.table, []).append(row)
        name = ref.table
        label = _label(row.condition, row.species, row.scenario, f"{ref.distance_km:g} km")

        if abs(row.investment - ref.investment) > 0.005:
            bundle.flag(name, label, "investment", row.investment, ref.investment, "investment composition")
        rides = rides_per_day(scenario.helicopter, ref.distance_km, cfg.envelope).rounded
        revenue_tol = TOL_CELL_USD * rides * cfg.envelope.working_days_per_year
        if abs(row.annual_revenue - ref.revenue) > revenue_tol:
            bundle.flag(name, label, "annual_revenue", row.annual_revenue, ref.revenue, _revenue_note(ref))
        published_npv = ref.npv_musd * 1e6
        if abs(row.npv - published_npv) > TOL_NPV_REL * abs(published_npv):
            bundle.flag(name, label, "npv", row.npv, published_npv, NOTE_SIMPLE_FLOW)
        engine_irr = None if row.irr is None else row.irr * 100
        if ref.irr_pct is not None and (engine_irr is None or abs(engine_irr - ref.irr_pct) > TOL_IRR_PP):
            bundle.flag(name, label, "irr_pct", engine_irr, ref.irr_pct, NOTE_SIMPLE_FLOW)
        if ref.payback is not None and row.payback != ref.payback:
            bundle.flag(name, label, "payback", row.payback, ref.payback, NOTE_PAYBACK)
        published_viable = (
            ref.irr_pct is not None and ref.irr_pct >= cfg.finance.marr * 100
            and ref.payback is not None and ref.payback <= cfg.finance.max_payback_years
        )
        if published_viable != (row.verdict is Verdict.VIABLE):
            implied = Verdict.VIABLE if published_viable else Verdict.NON_VIABLE
            bundle.flag(name, label, "verdict", row.verdict, implied, NOTE_VERDICT)
    titles = {
        "table02": "Feasibility, CH-47, Cedar", "table03": "Feasibility, CH-47, Ipê",
        "table04": "Feasibility, CH-47, Jatobá", "table05": "Feasibility, CH-53",
        "table06": "Feasibility, MI-26",
    }
    return [feasibility_table(rows, name, titles.get(name, name)) for name, rows in tables.items()]


def reproduce_tables(cfg: RunConfig | None = None) -> TableBundle:
    """Every published table recomputed by the engine, plus the discrepancy list."""
    cfg = cfg or RunConfig()
    bundle = TableBundle()
    for table in feasibility_tables(cfg, bundle):
        bundle.add(table)
    bundle.add(catalog_table(cfg))
    bundle.add(envelope_table(cfg, bundle))
    bundle.add(operating_cost_table(cfg, bundle))
    bundle.add(full_log_table(cfg, "scenario1", "table25", bundle))
    bundle.add(reduced_log_table(cfg, "scenario1", "table26", bundle))
    bundle.add(full_log_table(cfg, "scenario2", "table27", bundle))
    bundle.add(reduced_log_table(cfg, "scenario2", "table28", bundle))
    bundle.add(revenue_table(cfg, "scenario1", "table29", bundle))
    bundle.add(revenue_table(cfg, "scenario2", "table30", bundle))
    order = {d: i for i, d in enumerate(bundle.tables)}
    bundle.discrepancies.sort(key=lambda d: order.get(d.table, len(order)))
    return bundle


def inventory_table(cfg: RunConfig | None = None) -> Table:
    """Harvestable stems and clearing time per species, under both tail modes.

    ``days_tree`` assumes one ride lifts one whole stem; ``days_section``
    counts every section of a stem heavier than the per-ride cap. The notes
    carry area, rides per day, module count and return cycle, where module
    years come from the tree-based durations under the configured tail mode.
    """
    cfg = cfg or RunConfig()
    a = cfg.area
    area = HarvestArea(a.radius_km, a.reserve_total_ha)
    heli = cfg.get_helicopter(a.helicopter)
    rides = rides_per_day(heli, a.distance_km, cfg.envelope).rounded
    dims = parse_dims(a.dims)

    modes = [TailMode.PAPER_FIXED, TailMode.LOGNORMAL_CDF]
    dists = {m: DbhDistribution(cfg.distribution.sigma, cfg.distribution.mu, m,
                                cfg.distribution.paper_tail, cfg.distribution.threshold_factor)
             for m in modes}
    active = cfg.distribution.tail_mode
    columns = [("species", "text"), ("trees_per_ha", "g")]
    columns += [(f"count_{m.value}", "int") for m in modes]
    columns += [(f"days_tree_{m.value}", "int") for m in modes]
    columns += [("sections_per_stem", "int"), (f"days_section_{active.value}", "int")]
    table = Table("inventory", "Harvest inventory and clearing time", columns)

    tree_days = []
    for sp in cfg.species.values():
        counts = {m: harvestable_count(area, sp, dists[m]) for m in modes}
        days = {m: harvest_duration_days(counts[m], rides) for m in modes}
        sections = per_ride_billing(heli, sp, dims, cfg.sawmill, cfg.model.paper_compat,
                                    cfg.uriel.mass_kg).sections_per_stem
        section_days = harvest_duration_days(counts[active] * sections, rides)
        tree_days.append(days[active])
        table.rows.append([sp.name, sp.trees_per_ha, *counts.values(), *days.values(), sections, section_days])

    plan = rotation_plan(area.reserve_total_ha, area.area_ha, durations_days=tree_days)
    table.notes = [
        f"area_ha: {area.area_ha:.2f} (radius {a.radius_km:g} km)",
        f"rides_per_day: {rides:g} ({heli.model} at {a.distance_km:g} km, {a.dims})",
        "tail_fraction: " + ", ".join(f"{m.value} {lognormal_tail(dists[m]):.4f}" for m in modes),
        f"module_years: {plan.module_years} ({plan.module_years_exact:.2f} exact, {active.value})",
        f"modules: {plan.module_count}",
        f"return_cycle_years: {plan.return_cycle_years}",
    ]
    return table
