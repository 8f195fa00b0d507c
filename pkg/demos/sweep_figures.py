"""Reproduce the bound-comparison figures as CSV files.

Four panels: population 1000 and 10000, marked ratio 2% and 5%, sampling
half the population each time.  Each CSV row holds one relative deviation
delta with every bound's value and the exact tail; the companion plot tool
(see the plotter package) turns these into log-scale figures:

    plot --in sweep_N1000_r05.csv --out sweep_N1000_r05.png
"""

from hypertail import SweepConfig, write_sweep_csv

PANELS = [
    (1000, 0.02), (1000, 0.05),
    (10000, 0.02), (10000, 0.05),
]

for population, ratio in PANELS:
    config = SweepConfig(
        population=population,
        ratio=ratio,
        draws=population // 2,
        delta_min=0.001,
        delta_max=0.3,
        delta_steps=60,
    )
    out = f"sweep_N{population}_r{int(ratio * 100):02d}.csv"
    records = write_sweep_csv(config, out)
    first, last = records[0], records[-1]
    print(f"{out}: {len(records)} rows, thresholds "
          f"{first.threshold}..{last.threshold}, exact tail spans "
          f"{first.exact:.3e}..{last.exact:.3e}")
