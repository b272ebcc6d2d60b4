"""Measure how five_list_color scales with n and fit a log-log slope.

Run with ``python demos/runtime_scaling.py``. Takes a few seconds.
"""

import numpy as np

from signedcolor.bench import run_bench

sizes = [100, 200, 400, 800, 1600, 3200, 6400]
report = run_bench(sizes, trials=5, seed=0)

print(f"{'n':>6}  {'mean seconds':>12}  {'ratio':>6}")
prev = None
for row in report.rows:
    ratio = "" if prev is None else f"{row.mean_runtime / prev:6.2f}"
    print(f"{row.n:>6}  {row.mean_runtime:12.5f}  {ratio}")
    prev = row.mean_runtime

print(f"\nfitted exponent {report.fitted_exponent:.3f}")
per_vertex = np.array([r.mean_runtime / r.n for r in report.rows]) * 1e6
print("microseconds per vertex:", np.round(per_vertex, 2).tolist())
