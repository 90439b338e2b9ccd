"""When does a reward at the goal keep the agent going?"""

from fractions import Fraction

from biased_planner import gen_course, min_motivating_reward, three_node_path, traverse_with_reward

half = Fraction(1, 2)

# two edges, costs 1 then 4
g = three_node_path()
for r in (7, 8):
    walk = traverse_with_reward(g, half, r)
    print(f"reward {r}: {walk.outcome}", walk.abandoned_at or "")
print("smallest reward that works:", min_motivating_reward(g, half).min_reward)

# a three-week course with two projects; weekly effort 1, 4 or 9
course = gen_course(3, 2, (1, 4, 9), reward=16)
walk = traverse_with_reward(course, half)
print("course:", "-".join(walk.realized_path), walk.outcome)

# taking away the option to do nothing in week two fixes it
fixed = traverse_with_reward(course.without_nodes(["v20"]), half)
print("without v20:", "-".join(fixed.realized_path), fixed.outcome)
