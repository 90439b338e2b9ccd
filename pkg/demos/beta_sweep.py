"""Every path an agent can take as beta runs over [0, 1]."""

from fractions import Fraction

import numpy as np

from biased_planner import brute_force_beta_paths, enumerate_beta_paths, figure1, gen_bipartite_costs, traverse_fixed_goal

for name, g in (("seven-node example", figure1()), ("bipartite n=4", gen_bipartite_costs(4))):
    found = enumerate_beta_paths(g)
    print(f"{name}: {len(found)} paths from {len(g.edges)} edges")
    for vp in found[:5]:
        print("  ", "-".join(vp.path), vp.witness)

    # cross-check on a coarse grid
    betas = np.linspace(0.01, 1, 100)
    seen = {traverse_fixed_goal(g, Fraction(b).limit_denominator(1000)).realized_path for b in betas}
    print("   grid of 100 finds", len(seen), "; exact oracle finds", len(brute_force_beta_paths(g, 10_000)))
