"""Splitting a task into steps raises how many agents finish."""

import numpy as np

from biased_planner import numeric_oracle_partition, optimal_partition

c, r = 3, 4
ks = np.arange(1, 9)
rates = np.array([float(optimal_partition(c, r, int(k)).completion_rate) for k in ks])
oracle = np.array([numeric_oracle_partition(c, r, int(k)).completion_rate for k in ks])

print("k    rate      oracle gap")
for k, a, b in zip(ks, rates, oracle):
    print(f"{k}  {a:.6f}  {abs(a - b):.1e}")

plan = optimal_partition(c, r, 3)
print("three steps:", [f"{x:.4f}" for x in plan.steps])
print("bottlenecks:", [f"{x:.4f}" for x in plan.bottlenecks])
