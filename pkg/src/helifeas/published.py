"""Published reference figures that the engine is checked against.

Values are transcribed as printed, inconsistencies included. Species use
registry keys, helicopters catalog keys; NPVs are in millions of USD.
"""

from __future__ import annotations

from typing import NamedTuple

STEM_VOLUMES = {  # (species, dims preset) -> m3
    ("cedar", "scenario1"): 4.22, ("ipe", "scenario1"): 10.50, ("jatoba", "scenario1"): 7.11,
    ("cedar", "scenario2"): 7.64, ("ipe", "scenario2"): 19.47, ("jatoba", "scenario2"): 11.44,
}

GREEN_MASSES = {  # (species, dims preset) -> kg
    ("cedar", "scenario1"): 4_473, ("ipe", "scenario1"): 20_160, ("jatoba", "scenario1"): 13_651,
    ("cedar", "scenario2"): 8_098, ("ipe", "scenario2"): 37_382, ("jatoba", "scenario2"): 21_964,
}

GREEN_DENSITIES = {"cedar": 1060, "ipe": 1920, "jatoba": 1920}


class EnvelopeRow(NamedTuple):
    helicopter: str
    distance_km: float
    flight_min: float
    rides_raw: float
    rides_rounded: int


ENVELOPE = [EnvelopeRow(*r) for r in [
    ("CH47", 10, 4.12, 19.89, 20), ("CH47", 50, 20.61, 11.81, 12), ("CH47", 100, 41.23, 7.83, 8),
    ("CH47", 150, 61.85, 5.86, 6), ("CH47", 200, 82.47, 4.68, 5), ("CH47", 300, 123.71, 3.34, 3),
    ("CH53", 10, 4.44, 19.63, 20), ("CH53", 50, 22.22, 11.36, 11), ("CH53", 100, 44.44, 7.44, 7),
    ("CH53", 150, 66.66, 5.53, 5), ("CH53", 200, 88.88, 4.40, 4),
    ("MI26", 10, 4.70, 19.42, 19), ("MI26", 50, 23.52, 11.02, 11), ("MI26", 100, 47.05, 7.15, 7),
    ("MI26", 150, 70.58, 5.29, 5), ("MI26", 200, 94.11, 4.20, 4), ("MI26", 300, 141.17, 2.97, 3),
    ("MI26", 400, 188.23, 2.30, 2),
]]

# The one row where nearest rounding of the raw rides disagrees with print.
ENVELOPE_ROUNDING_EXCEPTIONS = {("CH53", 150)}


class OperatingCostRow(NamedTuple):
    helicopter: str
    usable_payload_kg: float
    cost_per_day: float
    cost_per_year: float


OPERATING_COST = [OperatingCostRow(*r) for r in [
    ("CH47", 10_485, 53_640.00, 5_364_000.00),
    ("CH53", 14_249, 275_976.00, 27_597_600.00),
    ("MI26", 17_920, 120_000.00, 12_000_000.00),
]]


class FullLogRow(NamedTuple):
    species: str
    volume_m3: float
    price_per_m3: float
    green_mass_kg: float
    sawmill_cost: float
    gross_revenue: float
    boards_billing: float


FULL_LOG = {
    "scenario1": [FullLogRow(*r) for r in [
        ("cedar", 4.22, 1059.00, 4_473, 628.78, 4_468.98, 3_840.20),
        ("ipe", 10.50, 1446.00, 20_160, 1_564.50, 15_183.00, 13_618.50),
        ("jatoba", 7.11, 868.00, 13_651, 1_059.39, 6_171.48, 5_112.09),
    ]],
    "scenario2": [FullLogRow(*r) for r in [
        ("cedar", 7.64, 1059.00, 8_098, 1_138.36, 8_090.76, 6_952.40),
        ("ipe", 19.47, 1446.00, 37_382, 2_901.03, 28_153.62, 25_252.59),
        ("jatoba", 11.44, 868.00, 21_964, 1_704.56, 9_929.92, 8_225.36),
    ]],
}


class ReducedLogRow(NamedTuple):
    species: str
    helicopter: str
    reduction_factor: float
    sawmill_cost: float
    gross_revenue: float
    boards_billing: float


REDUCED_LOG = {
    "scenario1": [ReducedLogRow(*r) for r in [
        ("ipe", "CH47", 0.595, 931.25, 9_037.50, 8_106.25),
        ("jatoba", "CH47", 0.879, 931.26, 5_425.07, 4_493.81),
        ("ipe", "CH53", 0.793, 1_241.66, 12_050.00, 10_808.33),
    ]],
    "scenario2": [ReducedLogRow(*r) for r in [
        ("ipe", "CH47", 0.321, 931.25, 9_037.59, 8_106.33),
        ("jatoba", "CH47", 0.546, 931.28, 5_425.19, 4_493.91),
        ("ipe", "CH53", 0.428, 1_241.67, 12_050.12, 10_808.45),
        ("jatoba", "CH53", 0.728, 1_241.71, 7_233.59, 5_991.88),
        ("ipe", "MI26", 0.535, 1_552.09, 15_062.66, 13_510.56),
        ("jatoba", "MI26", 0.910, 1_552.13, 9_041.99, 7_489.85),
    ]],
}


class RevenueRow(NamedTuple):
    helicopter: str
    distance_km: float
    species: str
    billing: float
    rides: int
    total: float


def _revenue_block(rows):
    return [RevenueRow(*r) for r in rows]


ANNUAL_REVENUE = {
    "scenario1": _revenue_block([
        ("CH47", 10, "cedar", 3_840.20, 20, 7_680_400.00),
        ("CH47", 10, "ipe", 8_106.25, 20, 16_212_500.00),
        ("CH47", 10, "jatoba", 4_493.81, 20, 8_987_620.00),
        ("CH47", 50, "cedar", 3_840.20, 12, 4_608_240.00),
        ("CH47", 50, "ipe", 8_106.25, 12, 9_727_500.00),
        ("CH47", 50, "jatoba", 4_493.81, 12, 5_392_572.00),
        ("CH47", 100, "cedar", 3_840.20, 8, 3_072_160.00),
        ("CH47", 100, "ipe", 8_106.25, 8, 6_485_000.00),
        ("CH47", 100, "jatoba", 4_493.81, 8, 3_595_048.00),
        ("CH53", 10, "cedar", 3_840.20, 20, 7_680_400.00),
        ("CH53", 10, "ipe", 8_106.25, 20, 16_212_500.00),
        ("CH53", 10, "jatoba", 4_493.81, 20, 8_987_620.00),
        ("CH53", 50, "cedar", 3_840.20, 11, 4_224_220.00),
        ("CH53", 50, "ipe", 8_106.25, 11, 8_916_875.00),
        ("CH53", 50, "jatoba", 4_493.81, 11, 4_943_191.00),
        ("CH53", 100, "cedar", 3_840.20, 7, 2_688_140.00),
        ("CH53", 100, "ipe", 8_106.25, 7, 5_674_375.00),
        ("CH53", 100, "jatoba", 4_493.81, 7, 3_145_667.00),
        ("MI26", 10, "cedar", 3_840.20, 19, 7_296_000.00),
        ("MI26", 10, "ipe", 8_106.25, 19, 15_401_875.00),
        ("MI26", 10, "jatoba", 4_493.81, 19, 8_537_099.00),
        ("MI26", 50, "cedar", 3_840.20, 11, 4_224_220.00),
        ("MI26", 50, "ipe", 8_106.25, 11, 8_916_875.00),
        ("MI26", 50, "jatoba", 4_493.81, 11, 4_943_191.00),
        ("MI26", 100, "cedar", 3_840.20, 7, 2_688_140.00),
        ("MI26", 100, "ipe", 8_106.25, 7, 5_674_375.00),
        ("MI26", 100, "jatoba", 4_493.81, 7, 3_145_667.00),
    ]),
    "scenario2": _revenue_block([
        ("CH47", 10, "cedar", 6_952.40, 20, 13_904_800.00),
        ("CH47", 10, "ipe", 8_106.25, 20, 16_212_500.00),
        ("CH47", 10, "jatoba", 4_493.81, 20, 8_987_620.00),
        ("CH47", 50, "cedar", 6_952.40, 12, 8_342_880.00),
        ("CH47", 50, "ipe", 8_106.25, 12, 16_212_500.00),
        ("CH47", 50, "jatoba", 4_493.81, 12, 8_987_620.00),
        ("CH47", 100, "cedar", 6_952.40, 8, 5_561_920.00),
        ("CH47", 100, "ipe", 8_106.25, 8, 16_212_500.00),
        ("CH47", 100, "jatoba", 4_493.81, 8, 8_987_620.00),
        ("CH53", 10, "cedar", 6_952.40, 20, 13_904_800.00),
        ("CH53", 10, "ipe", 10_808.45, 20, 21_616_900.00),
        ("CH53", 10, "jatoba", 5_991.88, 20, 11_983_760.00),
        ("CH53", 50, "cedar", 6_952.40, 11, 7_647_640.00),
        ("CH53", 50, "ipe", 10_808.45, 11, 11_889_295.00),
        ("CH53", 50, "jatoba", 5_991.88, 11, 4_943_191.00),
        ("CH53", 100, "cedar", 6_952.40, 7, 4_866_680.00),
        ("CH53", 100, "ipe", 10_808.45, 7, 7_565_915.00),
        ("CH53", 100, "jatoba", 5_991.88, 7, 4_194_316.00),
        ("MI26", 10, "cedar", 6_952.40, 19, 13_209_560.00),
        ("MI26", 10, "ipe", 13_510.56, 19, 25_670_064.00),
        ("MI26", 10, "jatoba", 7_489.85, 19, 14_230_715.00),
        ("MI26", 50, "cedar", 6_952.40, 11, 7_647_640.00),
        ("MI26", 50, "ipe", 13_510.56, 11, 14_861_616.00),
        ("MI26", 50, "jatoba", 7_489.85, 11, 8_238_835.00),
        ("MI26", 100, "cedar", 6_952.40, 7, 4_866_680.00),
        ("MI26", 100, "ipe", 13_510.56, 7, 9_457_392.00),
        ("MI26", 100, "jatoba", 7_489.85, 7, 5_242_895.00),
    ]),
}


class FeasibilityRef(NamedTuple):
    table: str
    helicopter: str
    condition: str
    species: str
    dims: str
    investment: float
    revenue: float
    distance_km: float
    npv_musd: float
    irr_pct: float | None
    payback: int | None


def _feas(table, heli, species_fixed=None, condition_fixed=None):
    def build(rows):
        out = []
        for sc, label, inv, rev, dist, npv_m, irr_pct, pb in rows:
            condition = condition_fixed or label
            species = species_fixed or label
            out.append(FeasibilityRef(table, heli, condition, species, f"scenario{sc}",
                                      inv, rev, dist, npv_m, irr_pct, pb))
        return out
    return build


FEASIBILITY = [
    *_feas("table02", "CH47", species_fixed="cedar")([
        (1, "new", 40_094_340, 7_680_400, 10, -37.50, None, None),
        (1, "used-new", 21_094_340, 7_680_400, 10, -18.50, None, None),
        (1, "used-old", 11_094_340, 7_680_400, 10, -8.50, None, None),
        (2, "new", 40_094_340, 13_904_800, 10, -5.97, None, None),
        (2, "used-new", 21_094_340, 13_904_800, 10, 13.02, 40, 4),
        (2, "used-old", 11_094_340, 13_904_800, 10, 23.02, 76, 3),
        (1, "used-old", 11_094_340, 7_680_400, 50, -24.29, None, None),
        (2, "used-old", 11_094_340, 8_342_880, 50, 4.42, 25, 8),
        (2, "used-old", 11_094_340, 5_561_920, 100, -9.65, None, None),
    ]),
    *_feas("table03", "CH47", species_fixed="ipe")([
        (1, "new", 40_094_340, 16_212_500, 10, 5.71, 26, 5),
        (1, "used-new", 21_094_340, 16_212_500, 10, 24.71, 51, 3),
        (1, "used-old", 11_094_340, 16_212_500, 10, 34.71, 97, 2),
        (2, "new", 40_094_340, 16_212_500, 10, 5.71, 26, 5),
        (2, "used-new", 21_094_340, 16_212_500, 10, 24.71, 51, 3),
        (2, "used-old", 11_094_340, 16_212_500, 10, 34.71, 97, 2),
        (1, "used-old", 11_094_340, 9_727_500, 50, 1.36, 38, 5),
        (1, "used-old", 11_094_340, 6_485_000, 100, -15.03, None, None),
        (2, "used-old", 11_094_340, 16_212_500, 50, 1.36, 38, 5),
        (2, "used-old", 11_094_340, 16_212_500, 100, -15.03, None, None),
    ]),
    *_feas("table04", "CH47", species_fixed="jatoba")([
        (1, "new", 40_094_340, 8_987_620, 10, -21.87, None, None),
        (1, "used-new", 21_094_340, 8_987_620, 10, -2.87, None, None),
        (1, "used-old", 11_094_340, 8_987_620, 10, 7.12, 32, 3),
        (2, "new", 40_094_340, 8_987_620, 10, -21.87, None, None),
        (2, "used-new", 21_094_340, 8_987_620, 10, -2.87, None, None),
        (2, "used-old", 11_094_340, 8_987_620, 10, 7.12, 32, 3),
        (1, "used-old", 11_094_340, 5_392_572, 50, -11.36, None, None),
        (1, "used-old", 11_094_340, 3_595_048, 100, -11.36, None, None),
        (2, "used-old", 11_094_340, 8_987_620, 50, -21.87, None, None),
        (2, "used-old", 11_094_340, 8_987_620, 100, -2.7, None, None),
    ]),
    *_feas("table05", "CH53", condition_fixed="new")([
        (1, "cedar", 88_094_340, 7_680_400, 10, -190.31, None, None),
        (1, "ipe", 88_094_340, 16_212_500, 10, -120.64, None, None),
        (1, "jatoba", 88_094_340, 8_987_620, 10, -168.80, None, None),
        (2, "cedar", 88_094_340, 13_904_800, 10, -159.19, None, None),
        (2, "ipe", 88_094_340, 21_616_900, 10, -120.64, None, None),
        (2, "jatoba", 88_094_340, 11_983_760, 10, -167.80, None, None),
    ]),
    *_feas("table06", "MI26", condition_fixed="new")([
        (1, "cedar", 26_094_340, 7_296_000, 10, -49.20, None, None),
        (2, "cedar", 26_094_340, 7_296_000, 10, -18.41, None, None),
        (1, "ipe", 26_094_340, 25_670_064, 10, 47.52, 55, 2),
        (2, "ipe", 26_094_340, 25_670_064, 10, 46.45, 55, 2),
        (1, "ipe", 26_094_340, 8_916_875, 50, -10.73, None, None),
        (2, "ipe", 26_094_340, 14_861_616, 50, -11.33, None, None),
        (1, "jatoba", 26_094_340, 8_537_099, 10, -36.62, None, None),
        (2, "jatoba", 26_094_340, 14_230_715, 10, -13.10, None, None),
    ]),
]

# Inventory paragraph.
HARVEST_AREA_HA = 31_415.92
MODULE_AREA_HA = 31_415.0
HARVEST_COUNTS = {"cedar": 15_707, "ipe": 11_780, "jatoba": 11_780}
HARVEST_DAYS = {"cedar": 785, "ipe": 589, "jatoba": 589}
MODULE_COUNT = 20
MODULE_YEARS = 5
RETURN_CYCLE_YEARS = 100
