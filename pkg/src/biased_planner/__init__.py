"""Present-biased agents planning paths through task graphs."""

from __future__ import annotations

from .agent import (
    Bias,
    Plan,
    Traversal,
    cost_ratio,
    limit_path,
    perceived_cost,
    plan_at,
    traverse_fixed_goal,
    traverse_with_reward,
)
from .errors import (
    ConvergenceFailure,
    CycleDetected,
    DuplicateEdge,
    InvalidCost,
    InvalidGraph,
    MalformedLabeling,
    MissingEndpoint,
    NonPositiveCost,
    NoPath,
    NotFound,
    NotMotivating,
    ParameterError,
    PlannerError,
    PrecisionViolation,
    RewardTooSmall,
    SizeLimit,
    ZeroShortestPath,
)
from .graph import Edge, TaskGraph, dist_to_t, format_cost, parse_cost, prune_to_st, topo_order, validate
from .instances import (
    chain,
    figure1,
    figure4_topology,
    gen_akerlof,
    gen_bipartite_costs,
    gen_bipartite_labels,
    gen_course,
    gen_exponential,
    gen_exponential_eps,
    three_node_path,
)
from .minor import MinorModel, Violation, check_claim_A, extract_fan_minor, rank_profile, verify_minor
from .motivation import (
    MotivationReport,
    SubgraphCert,
    Theorem5Report,
    check_theorem5,
    find_motivating_subgraph,
    is_minimal_motivating,
    min_motivating_reward,
    minimize_motivating_subgraph,
    search_fig4_instance,
)
from .parametric import (
    Interval,
    IntervalLabeling,
    Line,
    ValidPath,
    brute_force_beta_paths,
    build_interval_labels,
    enumerate_beta_paths,
    enumerate_valid_paths,
    lower_envelope,
)
from .partition import PartitionPlan, closed_form_rate, numeric_oracle_partition, optimal_partition

__version__ = "0.1.0"
