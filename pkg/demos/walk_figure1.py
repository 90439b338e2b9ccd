"""A present-biased agent on the seven-node example graph."""

from fractions import Fraction

from biased_planner import cost_ratio, figure1, traverse_fixed_goal

g = figure1()
print("shortest path", "-".join(g.shortest_path("s")), "cost", g.dist["s"])

# at every node the agent weighs the next edge fully and the rest at beta
walk = traverse_fixed_goal(g, Fraction(1, 2))
for plan in walk.plans:
    print(f"at {plan.node}: plans {'-'.join(plan.path)} (feels like {plan.biased_cost})")

print("walked", "-".join(walk.realized_path), "cost", walk.total_cost)
print("cost ratio", cost_ratio(g, Fraction(1, 2)))  # 13/10
