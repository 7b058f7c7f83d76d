"""
Stem volume, green density and lift mass
========================================

"""

# Each species carries log-linear volume coefficients, a specific gravity
# and a green moisture content. Two stem sizes are preset.
from helifeas import default_species, green_density, green_mass, stem_volume
from helifeas.species import DIMS_PRESETS, StemDims

species = default_species()
for preset, dims in DIMS_PRESETS.items():
    print(f"{preset}: dbh {dims.dbh_cm:g} cm, height {dims.height_m:g} m")
    for sp in species.values():
        exact = stem_volume(sp, dims, paper_compat=False)
        print(f"  {sp.name:7s} volume {exact:8.4f} m3 (reported {stem_volume(sp, dims):.2f})"
              f"  density {green_density(sp):6.0f} kg/m3  mass {green_mass(sp, dims):8.0f} kg")

# Reported figures are truncated to two decimals, and masses are built on
# those truncated volumes. Exact mode skips every truncation.
ipe = species["ipe"]
print("Ipê at 80x25, exact mass:", round(green_mass(ipe, DIMS_PRESETS["scenario1"], paper_compat=False), 1))

# Any stem up to 100 cm by 30 m is accepted; larger ones raise.
print("Jatobá 60x20:", round(stem_volume(species["jatoba"], StemDims(60, 20), paper_compat=False), 3), "m3")
try:
    StemDims(120, 20)
except ValueError as exc:
    print("rejected:", exc)
