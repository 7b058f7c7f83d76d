from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helifeas.errors import DomainError, ValidityError
from helifeas.species import (
    DIMS_PRESETS,
    SpeciesSpec,
    StemDims,
    default_species,
    green_density,
    green_mass,
    resolve_dims,
    species_key,
    stem_volume,
)

SPECIES = default_species()

# exp(b0) * d**b1 * h**b2 at 30 significant digits (mpmath), frozen
EXACT_VOLUMES = {
    ("cedar", "scenario1"): 4.22659857464,
    ("ipe", "scenario1"): 10.5086240105,
    ("jatoba", "scenario1"): 7.11704425363,
    ("cedar", "scenario2"): 7.64464356386,
    ("ipe", "scenario2"): 19.4771019438,
    ("jatoba", "scenario2"): 11.4464321306,
}


def _power_form(sp: SpeciesSpec, d: float, h: float) -> float:
    return math.exp(sp.beta0) * d**sp.beta1 * h**sp.beta2


@pytest.mark.parametrize("key,preset", list(EXACT_VOLUMES))
def test_exact_volume_matches_power_form(key, preset):
    sp, dims = SPECIES[key], DIMS_PRESETS[preset]
    v = stem_volume(sp, dims, paper_compat=False)
    assert v == pytest.approx(_power_form(sp, dims.dbh_cm, dims.height_m), rel=1e-12)
    assert v == pytest.approx(EXACT_VOLUMES[key, preset], abs=1e-9)


@pytest.mark.parametrize("key,preset", list(EXACT_VOLUMES))
def test_compat_volume_truncates(key, preset):
    exact = EXACT_VOLUMES[key, preset]
    assert stem_volume(SPECIES[key], DIMS_PRESETS[preset]) == math.floor(exact * 100) / 100


def test_green_densities():
    assert {k: green_density(s) for k, s in SPECIES.items()} == pytest.approx(
        {"cedar": 1060.0, "ipe": 1920.0, "jatoba": 1920.0}
    )


def test_green_mass_truncated_to_kg():
    # 7.11 m3 * 1920 kg/m3 = 13,651.2 kg
    assert green_mass(SPECIES["jatoba"], DIMS_PRESETS["scenario1"]) == 13_651
    assert green_mass(SPECIES["jatoba"], DIMS_PRESETS["scenario1"], paper_compat=False) == pytest.approx(
        EXACT_VOLUMES["jatoba", "scenario1"] * 1920, rel=1e-9
    )


dbh = st.floats(1.0, 100.0)
height = st.floats(1.0, 30.0)


@given(d1=dbh, d2=dbh, h=height, key=st.sampled_from(sorted(SPECIES)))
def test_volume_monotone_in_dbh(d1, d2, h, key):
    lo, hi = sorted((d1, d2))
    sp = SPECIES[key]
    assert stem_volume(sp, StemDims(lo, h), False) <= stem_volume(sp, StemDims(hi, h), False)


@given(d=dbh, h1=height, h2=height, key=st.sampled_from(sorted(SPECIES)))
def test_volume_monotone_in_height(d, h1, h2, key):
    lo, hi = sorted((h1, h2))
    sp = SPECIES[key]
    assert stem_volume(sp, StemDims(d, lo), False) <= stem_volume(sp, StemDims(d, hi), False)


@pytest.mark.parametrize("d,h", [(0, 10), (-1, 10), (50, 0), (100.5, 20), (50, 31)])
def test_stem_dims_domain(d, h):
    with pytest.raises(DomainError):
        StemDims(d, h)


def test_design_limits_inclusive():
    StemDims(100.0, 30.0)


@pytest.mark.parametrize("field,value", [
    ("beta1", 0.0), ("beta2", -0.1), ("specific_gravity_15", 0.0),
    ("specific_gravity_15", 1.6), ("green_moisture_pct", 29.9), ("price_per_m3", 0.0), ("trees_per_ha", 0.0),
])
def test_species_validity(field, value):
    base = dict(name="x", beta0=-9.0, beta1=2.0, beta2=0.5, specific_gravity_15=0.6,
                green_moisture_pct=80.0, price_per_m3=500.0, trees_per_ha=1.0)
    base[field] = value
    with pytest.raises(ValidityError):
        SpeciesSpec(**base)


def test_validity_error_is_value_error():
    assert issubclass(ValidityError, ValueError)


def test_species_key_normalises_accents():
    assert species_key("Jatobá") == "jatoba"
    assert species_key(" Ipê ") == "ipe"


def test_resolve_dims():
    assert resolve_dims("scenario2") == StemDims(100.0, 30.0)
    with pytest.raises(DomainError):
        resolve_dims("scenario9")
