"""Exception hierarchy shared by every module."""

from __future__ import annotations

from collections.abc import Sequence


class PlannerError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InvalidGraph(PlannerError, ValueError):
    pass


class CycleDetected(InvalidGraph):
    def __init__(self, cycle: Sequence[str]) -> None:
        self.cycle = tuple(cycle)
        super().__init__("graph contains a cycle: " + " -> ".join(self.cycle))


class MissingEndpoint(InvalidGraph):
    pass


class NonPositiveCost(InvalidGraph):
    pass


class DuplicateEdge(InvalidGraph):
    pass


class InvalidCost(PlannerError, ValueError):
    pass


class NoPath(PlannerError):
    pass


class ZeroShortestPath(PlannerError):
    pass


class ParameterError(PlannerError, ValueError):
    pass


class PrecisionViolation(ParameterError):
    def __init__(self, j: int, message: str) -> None:
        self.j = j
        super().__init__(message)


class MalformedLabeling(PlannerError):
    pass


class NotMotivating(PlannerError):
    pass


class SizeLimit(PlannerError):
    def __init__(self, edges: int, limit: int) -> None:
        self.edges = edges
        self.limit = limit
        super().__init__(f"graph has {edges} edges; exhaustive search limit is {limit}")


class NotFound(PlannerError):
    pass


class RewardTooSmall(PlannerError, ValueError):
    pass


class ConvergenceFailure(PlannerError):
    pass
