"""
Flight envelope: rides per workday
==================================

"""

# A ride is a round trip at cruise speed plus a fixed on-site cycle.
from helifeas import EnvelopeParams, RoundingMode, annual_flight_cost, default_catalog, rides_per_day
from helifeas.fleet import CYCLE_PRESETS, usable_payload

catalog = default_catalog()
params = EnvelopeParams()
print(f"workday {params.workday_minutes:g} min, cycle {params.fixed_cycle_min:g} min")
for heli in catalog.values():
    print(f"{heli.model}: radius {heli.mission_radius_km:g} km, usable payload {usable_payload(heli):g} kg,"
          f" flight cost {annual_flight_cost(heli):,.0f} USD/yr")
    for d in (10, 50, 100, 150, 200):
        if d > heli.mission_radius_km:
            continue
        r = rides_per_day(heli, d, params)
        print(f"  {d:4d} km  raw {r.raw:6.2f}  rounded {r.rounded:g}")

# The rounding rule matters close to a half: CH-53 at 150 km.
for mode in RoundingMode:
    r = rides_per_day(catalog["CH53"], 150, EnvelopeParams(rounding_mode=mode))
    print(f"{mode.value:8s} -> {r.rounded:g}")

# A shorter fixed cycle lifts the ride count.
prose = EnvelopeParams(fixed_cycle_min=CYCLE_PRESETS["prose"])
print("CH-47 @10 km, 15-min cycle:", round(rides_per_day(catalog["CH47"], 10, prose).raw, 2))
