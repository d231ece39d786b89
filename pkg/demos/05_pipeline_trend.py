"""
Least palette on projective planes
==================================

Runs the experiment pipeline on incidence graphs of PG(2, q) and prints
the CSV. The ratio of the least resample palette to delta_star is only
observed, never asserted.
"""
from frugal.pipeline import format_records, parse_config, run_pipeline

cfg = parse_config("""
beta = 2
t = 2
reduction = cycle
seeds = 1, 2, 3
max_rounds = 5000
exact_cap = 1
instance = pg q=2
instance = pg q=3
instance = pg q=5
""")
records = run_pipeline(cfg)
print(format_records(records))

for r in records:
    if r.algorithm == "resample":
        print(r.instance, r.delta, r.k, round(r.k / r.delta_star, 3))
