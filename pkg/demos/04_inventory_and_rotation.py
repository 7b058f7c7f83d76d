"""
Harvestable stems and module rotation
=====================================

"""

# Harvestable stems are area x density x the share of trees above twice the
# typical diameter. Two readings of that share are available.
from helifeas import DbhDistribution, HarvestArea, TailMode, lognormal_tail
from helifeas.config import RunConfig
from helifeas.reproduce import inventory_table

area = HarvestArea(radius_km=10)
print(f"module area {area.area_ha:,.2f} ha out of {area.reserve_total_ha:,.0f} ha")
for mode in TailMode:
    print(f"{mode.value:14s} tail {lognormal_tail(DbhDistribution(tail_mode=mode)):.4f}")

# Counts, clearing days and the rotation in one table.
print(inventory_table(RunConfig()).to_markdown())

# A wider lognormal spread fattens the tail.
print("sigma 0.7:", round(lognormal_tail(DbhDistribution(sigma=0.7, tail_mode="lognormal_cdf")), 4))
