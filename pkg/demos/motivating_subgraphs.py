"""Removing edges so the agent finishes."""

from fractions import Fraction

from biased_planner import (
    find_motivating_subgraph,
    gen_course,
    minimize_motivating_subgraph,
    search_fig4_instance,
    traverse_fixed_goal,
)

half = Fraction(1, 2)

course = gen_course(3, 2, (1, 4, 9), reward=16)
cert = find_motivating_subgraph(course, half, 16)
dropped = sorted(set(course.edge_keys()) - set(cert.edges))
print("dropped edges:", dropped)

small = minimize_motivating_subgraph(course, cert.edges, half, 16)
print("minimal subgraph:", small.edges)
print("off-path structure ok:", small.structure.ok)

# a graph where both routes are needed: the agent aims high and then switches
g = search_fig4_instance()
print({f"{e.tail}{e.head}": str(e.cost) for e in g.edges}, "reward", g.reward)
walk = traverse_fixed_goal(g, half)
print("planned", "-".join(walk.plans[0].path), "walked", "-".join(walk.realized_path))
