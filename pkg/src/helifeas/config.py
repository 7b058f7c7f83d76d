"""Run configuration: a sectioned INI file layered over the reference defaults.

Grammar (``configparser`` dialect, ``#``/``;`` comments, keys case-sensitive)::

    [model]            paper_compat = true|false ; section_caps = tables|prose
    [species.KEY]      name, beta0, beta1, beta2, specific_gravity_15,
                       green_moisture_pct, price_per_m3, trees_per_ha
    [helicopter.KEY]   model, payload_kg, mission_radius_km, cruise_kmh,
                       flight_hour_cost, section_cap_kg (number or "none"),
                       price.<condition> = USD   (one line per condition)
    [envelope]         workday_hours, working_days_per_year,
                       fixed_cycle_min (minutes or tables|prose|simulation),
                       rounding_mode = nearest|floor|ceil|raw
    [finance]          marr, horizon_years, max_payback_years,
                       payback_mode = undiscounted|discounted
    [sawmill]          capex, processing_cost_per_m3
    [distribution]     sigma, mu, tail_mode = paper_fixed|lognormal_cdf,
                       paper_tail, threshold_factor
    [area]             radius_km, reserve_total_ha, helicopter, distance_km, dims
    [uriel]            unit_price, mass_kg, prototype_cost
    [grid]             helicopters = MODEL:condition, ... ; species = a, b ;
                       dims = scenario1, 90x28 ; distances = 10, 50
    [output]           format = csv|markdown ; path = FILE (empty: stdout) ;
                       dir = DIRECTORY for table bundles

Species and helicopter sections whose KEY already exists override only the
keys they list; new KEYs must give every field. Unknown sections or keys
are rejected. Every default reproduces the reference setup.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path

from .errors import ConfigError, HeliFeasError
from .finance import PROTOTYPE_COST, URIEL_UNIT_PRICE, FinanceParams
from .fleet import (
    CYCLE_PRESETS,
    PROSE_SECTION_CAP_KG,
    URIEL_MASS_KG,
    EnvelopeParams,
    HelicopterSpec,
    default_catalog,
    model_key,
)
from .inventory import RESERVE_TOTAL_HA, DbhDistribution
from .payload import SawmillSpec
from .species import DIMS_PRESETS, SpeciesSpec, StemDims, default_species, species_key

ENV_VAR = "HELIFEAS_CONFIG"


class OutputFormat(str, Enum):
    CSV = "csv"
    MARKDOWN = "markdown"


@dataclass(frozen=True)
class Grid:
    """Cartesian sweep axes. ``helicopters`` holds ``(catalog key, condition)`` pairs."""

    helicopters: tuple[tuple[str, str], ...] = ()
    species: tuple[str, ...] = ()
    dims: tuple[str, ...] = ()
    distances: tuple[float, ...] = ()

    @property
    def size(self) -> int:
        return len(self.helicopters) * len(self.species) * len(self.dims) * len(self.distances)


REFERENCE_GRID = Grid(
    helicopters=(("CH47", "new"), ("CH47", "used-new"), ("CH47", "used-old")),
    species=("cedar", "ipe", "jatoba"),
    dims=("scenario1", "scenario2"),
    distances=(10.0, 50.0, 100.0),
)


@dataclass(frozen=True)
class AreaSettings:
    radius_km: float = 10.0
    reserve_total_ha: float = RESERVE_TOTAL_HA
    helicopter: str = "CH47"
    distance_km: float = 10.0
    dims: str = "scenario1"


@dataclass(frozen=True)
class UrielSettings:
    unit_price: float = URIEL_UNIT_PRICE
    mass_kg: float = URIEL_MASS_KG
    prototype_cost: float = PROTOTYPE_COST


@dataclass(frozen=True)
class OutputSettings:
    format: OutputFormat = OutputFormat.CSV
    path: str = ""
    dir: str = "tables"


@dataclass(frozen=True)
class ModelSettings:
    paper_compat: bool = True
    section_caps: str = "tables"


@dataclass(frozen=True)
class RunConfig:
    species: dict[str, SpeciesSpec] = field(default_factory=default_species)
    catalog: dict[str, HelicopterSpec] = field(default_factory=default_catalog)
    model: ModelSettings = ModelSettings()
    envelope: EnvelopeParams = EnvelopeParams()
    finance: FinanceParams = FinanceParams()
    sawmill: SawmillSpec = SawmillSpec()
    distribution: DbhDistribution = DbhDistribution()
    area: AreaSettings = AreaSettings()
    uriel: UrielSettings = UrielSettings()
    grid: Grid = REFERENCE_GRID
    output: OutputSettings = OutputSettings()

    def get_species(self, name: str) -> SpeciesSpec:
        try:
            return self.species[species_key(name)]
        except KeyError:
            raise ConfigError(f"unknown species {name!r}; known: {', '.join(self.species)}") from None

    def get_helicopter(self, model: str) -> HelicopterSpec:
        try:
            return self.catalog[model_key(model)]
        except KeyError:
            raise ConfigError(f"unknown helicopter {model!r}; known: {', '.join(self.catalog)}") from None


# ---------------------------------------------------------------- parsing

_SPECIES_FIELDS = [f.name for f in fields(SpeciesSpec)]
_HELI_NUMERIC = ["payload_kg", "mission_radius_km", "cruise_kmh", "flight_hour_cost"]
_SIMPLE_SECTIONS = {
    "model": ModelSettings,
    "envelope": EnvelopeParams,
    "finance": FinanceParams,
    "sawmill": SawmillSpec,
    "distribution": DbhDistribution,
    "area": AreaSettings,
    "uriel": UrielSettings,
    "output": OutputSettings,
}


def _parser() -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None, default_section="__defaults__")
    cp.optionxform = str  # type: ignore[assignment,method-assign]
    return cp


def _float(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key}: expected a number, got {raw!r}") from None


def _bool(section: str, key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in {"true", "yes", "on", "1"}:
        return True
    if lowered in {"false", "no", "off", "0"}:
        return False
    raise ConfigError(f"[{section}] {key}: expected true/false, got {raw!r}")


def _list(raw: str) -> list[str]:
    return [item.strip() for item in raw.split(",") if item.strip()]


def _coerce(section: str, key: str, raw: str, current: object) -> object:
    if isinstance(current, bool):
        return _bool(section, key, raw)
    if isinstance(current, Enum):
        try:
            return type(current)(raw.strip())
        except ValueError:
            choices = ", ".join(m.value for m in type(current))
            raise ConfigError(f"[{section}] {key}: {raw!r} not one of {choices}") from None
    if isinstance(current, int):
        value = _float(section, key, raw)
        if value != int(value):
            raise ConfigError(f"[{section}] {key}: expected an integer, got {raw!r}")
        return int(value)
    if isinstance(current, float):
        if section == "envelope" and key == "fixed_cycle_min" and raw.strip() in CYCLE_PRESETS:
            return CYCLE_PRESETS[raw.strip()]
        return _float(section, key, raw)
    return raw.strip()


def _apply_simple(section: str, obj, items: dict[str, str]):
    known = {f.name for f in fields(obj)}
    updates = {}
    for key, raw in items.items():
        if key not in known:
            raise ConfigError(f"[{section}] unknown key {key!r}")
        updates[key] = _coerce(section, key, raw, getattr(obj, key))
    try:
        return replace(obj, **updates)
    except HeliFeasError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"[{section}] {exc}") from None


def _species_from(key: str, items: dict[str, str], base: SpeciesSpec | None) -> SpeciesSpec:
    section = f"species.{key}"
    values = {f: getattr(base, f) for f in _SPECIES_FIELDS} if base else {}
    for k, raw in items.items():
        if k not in _SPECIES_FIELDS:
            raise ConfigError(f"[{section}] unknown key {k!r}")
        values[k] = raw.strip() if k == "name" else _float(section, k, raw)
    values.setdefault("name", key)
    missing = [f for f in _SPECIES_FIELDS if f not in values]
    if missing:
        raise ConfigError(f"[{section}] missing keys: {', '.join(missing)}")
    try:
        return SpeciesSpec(**values)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {exc}") from None


def _heli_from(key: str, items: dict[str, str], base: HelicopterSpec | None) -> HelicopterSpec:
    section = f"helicopter.{key}"
    values: dict = {}
    prices: dict[str, float] = {}
    if base is not None:
        values = {k: getattr(base, k) for k in ["model", *_HELI_NUMERIC, "section_cap_kg"]}
        prices = dict(base.acquisition_prices)
    for k, raw in items.items():
        if k.startswith("price."):
            prices[k[len("price."):]] = _float(section, k, raw)
        elif k == "model":
            values["model"] = raw.strip()
        elif k == "section_cap_kg":
            values[k] = None if raw.strip().lower() in {"", "none"} else _float(section, k, raw)
        elif k in _HELI_NUMERIC:
            values[k] = _float(section, k, raw)
        else:
            raise ConfigError(f"[{section}] unknown key {k!r}")
    values.setdefault("model", key)
    values.setdefault("section_cap_kg", None)
    missing = [k for k in _HELI_NUMERIC if k not in values]
    if missing:
        raise ConfigError(f"[{section}] missing keys: {', '.join(missing)}")
    if not prices:
        raise ConfigError(f"[{section}] needs at least one price.<condition> line")
    return HelicopterSpec(acquisition_prices=prices, **values)


def _grid_from(items: dict[str, str], base: Grid) -> Grid:
    values = {
        "helicopters": base.helicopters, "species": base.species,
        "dims": base.dims, "distances": base.distances,
    }
    for k, raw in items.items():
        if k == "helicopters":
            pairs = []
            for item in _list(raw):
                model, _, condition = item.partition(":")
                pairs.append((model_key(model), condition.strip() or "new"))
            values[k] = tuple(pairs)
        elif k == "species":
            values[k] = tuple(species_key(s) for s in _list(raw))
        elif k == "dims":
            for d in _list(raw):
                parse_dims(d)
            values[k] = tuple(_list(raw))
        elif k == "distances":
            values[k] = tuple(_float("grid", k, d) for d in _list(raw))
        else:
            raise ConfigError(f"[grid] unknown key {k!r}")
    return Grid(**values)


def parse_dims(text: str) -> StemDims:
    """A preset name or an explicit ``DBHxHEIGHT`` pair such as ``90x28``."""
    text = text.strip()
    if text in DIMS_PRESETS:
        return DIMS_PRESETS[text]
    dbh, sep, height = text.lower().partition("x")
    if not sep:
        raise ConfigError(f"dims {text!r}: expected a preset ({', '.join(DIMS_PRESETS)}) or DBHxHEIGHT")
    try:
        return StemDims(float(dbh), float(height))
    except ValueError as exc:
        raise ConfigError(f"dims {text!r}: {exc}") from None


def loads(text: str) -> RunConfig:
    """Parse config text layered over the defaults."""
    cp = _parser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"unparseable config: {exc}") from None

    cfg = RunConfig()
    species = dict(cfg.species)
    catalog = dict(cfg.catalog)
    simple: dict[str, object] = {}
    grid = cfg.grid
    for section in cp.sections():
        items = dict(cp.items(section))
        kind, _, key = section.partition(".")
        if kind == "species" and key:
            k = species_key(key)
            species[k] = _species_from(k, items, species.get(k))
        elif kind == "helicopter" and key:
            k = model_key(key)
            catalog[k] = _heli_from(k, items, catalog.get(k))
        elif section == "grid":
            grid = _grid_from(items, grid)
        elif section in _SIMPLE_SECTIONS:
            simple[section] = _apply_simple(section, getattr(cfg, section), items)
        else:
            raise ConfigError(f"unknown section [{section}]")

    model = simple.get("model", cfg.model)
    if model.section_caps not in {"tables", "prose"}:
        raise ConfigError(f"[model] section_caps must be tables or prose, got {model.section_caps!r}")
    if model.section_caps == "prose":
        catalog = {k: replace(h, section_cap_kg=PROSE_SECTION_CAP_KG) for k, h in catalog.items()}

    cfg = RunConfig(species=species, catalog=catalog, grid=grid, **{**simple, "model": model})
    for model_name, condition in cfg.grid.helicopters:
        cfg.get_helicopter(model_name).price(condition)
    for name in cfg.grid.species:
        cfg.get_species(name)
    cfg.get_helicopter(cfg.area.helicopter)
    parse_dims(cfg.area.dims)
    return cfg


def load(path: str | Path | None) -> RunConfig:
    """Read ``path``; ``None`` means defaults."""
    if path is None:
        return RunConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return loads(text)


# ---------------------------------------------------------------- dumping

def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dumps(cfg: RunConfig) -> str:
    """Serialise the full effective configuration; ``loads(dumps(c)) == c``."""
    cp = _parser()
    cp["model"] = {f.name: _fmt(getattr(cfg.model, f.name)) for f in fields(cfg.model)}
    for key, sp in cfg.species.items():
        cp[f"species.{key}"] = {f: _fmt(getattr(sp, f)) for f in _SPECIES_FIELDS}
    for key, heli in cfg.catalog.items():
        section = {"model": heli.model}
        section.update({k: _fmt(getattr(heli, k)) for k in _HELI_NUMERIC})
        section["section_cap_kg"] = "none" if heli.section_cap_kg is None else _fmt(heli.section_cap_kg)
        section.update({f"price.{c}": _fmt(p) for c, p in heli.acquisition_prices.items()})
        cp[f"helicopter.{key}"] = section
    for name in ["envelope", "finance", "sawmill", "distribution", "area", "uriel", "output"]:
        obj = getattr(cfg, name)
        cp[name] = {f.name: _fmt(getattr(obj, f.name)) for f in fields(obj)}
    g = cfg.grid
    cp["grid"] = {
        "helicopters": ", ".join(f"{m}:{c}" for m, c in g.helicopters),
        "species": ", ".join(g.species),
        "dims": ", ".join(g.dims),
        "distances": ", ".join(_fmt(float(d)) for d in g.distances),
    }
    buf = io.StringIO()
    cp.write(buf)
    return buf.getvalue()
