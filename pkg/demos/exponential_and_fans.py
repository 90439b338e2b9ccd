"""Procrastination that costs exponentially more, and the fan minor behind it."""

import math
from fractions import Fraction

import numpy as np

from biased_planner import cost_ratio, extract_fan_minor, gen_exponential, rank_profile, verify_minor

half = Fraction(1, 2)

ns = np.arange(1, 13)
ratios = np.array([float(cost_ratio(gen_exponential(int(n), Fraction(3, 2), allow_zero=True), half)) for n in ns])
print("ratio / 1.5**n:", np.round(ratios / 1.5**ns, 12))

g = gen_exponential(12, Fraction(19, 10), allow_zero=True)
print("ranks:", rank_profile(g, half))

model = extract_fan_minor(g, half)
print("fan with", model.fan_size, "path super-nodes; hub", sorted(model.hub))
print("verifier:", verify_minor(g, model) or "ok")
print("log2 of the cost ratio:", round(math.log2(cost_ratio(g, half)), 3))
