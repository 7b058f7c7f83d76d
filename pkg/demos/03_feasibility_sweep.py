"""
Feasibility sweep: NPV, IRR and payback
=======================================

"""

# A scenario fixes airframe, condition, species, stem size and distance.
# Flows are annual boards billing minus annual flight cost.
from helifeas import RunConfig, evaluate, make_scenario, sweep
from helifeas.config import Grid, loads
from helifeas.report import feasibility_table

cfg = RunConfig()
row = evaluate(make_scenario(cfg, "CH47", "used-old", "ipe", "scenario1", 10))
print(f"{row.helicopter} {row.condition} {row.species}: NPV {row.npv:,.0f}  IRR {row.irr:.1%}"
      f"  payback {row.payback} yr  -> {row.verdict.value}")

# Sweep a small grid. Output order is fixed whatever the worker count.
grid = Grid(helicopters=(("CH47", "used-old"), ("MI26", "new")), species=("ipe", "jatoba"),
            dims=("scenario2",), distances=(10.0, 50.0, 350.0))
rows = sweep(grid, cfg, max_workers=4)
print(feasibility_table(rows).to_markdown())

# Targets beyond the mission radius come back flagged instead of raising.
print([r.flags for r in rows if r.npv is None])

# A lower hurdle rate via config text.
lenient = loads("[finance]\nmarr = 0.10\n")
row = evaluate(make_scenario(lenient, "CH47", "new", "ipe", "scenario1", 10))
print("CH-47 new, Ipê @ 10% MARR:", f"NPV {row.npv:,.0f}", row.verdict.value)
