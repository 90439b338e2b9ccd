"""JSON encoding for graphs, traces and analysis results.

Graph documents store costs as exact strings (``"3/2"``, ``"0.25"``); every
other rational is written as ``{"num": p, "den": q}``.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path as FsPath
from typing import Any

from .agent import Plan, Traversal
from .errors import InvalidGraph
from .graph import TaskGraph, format_cost
from .minor import MinorModel, Violation
from .motivation import MotivationReport, SubgraphCert, Theorem5Report
from .parametric import Interval, IntervalLabeling, ValidPath
from .partition import PartitionPlan


def rational(q: Fraction) -> dict[str, int]:
    return {"num": q.numerator, "den": q.denominator}


def parse_rational(obj: Mapping[str, int]) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def graph_to_json(graph: TaskGraph) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "nodes": list(graph.nodes),
        "edges": [{"from": e.tail, "to": e.head, "cost": format_cost(e.cost)} for e in graph.edges],
        "s": graph.s,
        "t": graph.t,
    }
    if graph.reward is not None:
        doc["reward"] = format_cost(graph.reward)
    if graph.allow_zero:
        doc["allow_zero"] = True
    return doc


def graph_from_json(doc: Mapping[str, Any], *, allow_zero: bool | None = None) -> TaskGraph:
    try:
        edges = [(e["from"], e["to"], e["cost"]) for e in doc["edges"]]
        s, t = doc["s"], doc["t"]
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"graph document is missing {exc}") from exc
    zero = doc.get("allow_zero", False) if allow_zero is None else allow_zero
    return TaskGraph(edges, s, t, doc.get("nodes", ()), reward=doc.get("reward"), allow_zero=zero)


def load_graph(path: str | FsPath, *, allow_zero: bool | None = None) -> TaskGraph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh), allow_zero=allow_zero)


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def plan_to_json(plan: Plan) -> dict[str, Any]:
    return {"node": plan.node, "path": list(plan.path), "biased_cost": rational(plan.biased_cost)}


def traversal_to_json(walk: Traversal) -> dict[str, Any]:
    return {
        "realized_path": list(walk.realized_path),
        "plans": [plan_to_json(p) for p in walk.plans],
        "outcome": walk.outcome,
        "abandoned_at": walk.abandoned_at,
        "total_cost": rational(walk.total_cost),
        "reward": None if walk.reward is None else rational(walk.reward),
    }


def traversal_from_json(doc: Mapping[str, Any]) -> Traversal:
    plans = tuple(
        Plan(p["node"], tuple(p["path"]), parse_rational(p["biased_cost"])) for p in doc["plans"]
    )
    reward = doc.get("reward")
    return Traversal(
        realized_path=tuple(doc["realized_path"]),
        plans=plans,
        reached=doc["outcome"] == "reached",
        total_cost=parse_rational(doc["total_cost"]),
        reward=None if reward is None else parse_rational(reward),
        abandoned_at=doc.get("abandoned_at"),
    )


def interval_to_json(iv: Interval | None) -> dict[str, Any] | None:
    if iv is None:
        return None
    return {
        "lo": rational(iv.lo),
        "hi": rational(iv.hi),
        "lo_closed": iv.lo_closed,
        "hi_closed": iv.hi_closed,
    }


def interval_from_json(doc: Mapping[str, Any] | None) -> Interval | None:
    if doc is None:
        return None
    return Interval(parse_rational(doc["lo"]), parse_rational(doc["hi"]), doc["lo_closed"], doc["hi_closed"])


def labeling_to_json(labeling: IntervalLabeling) -> dict[str, Any]:
    return {
        "s": labeling.s,
        "t": labeling.t,
        "labels": [
            {"from": u, "to": w, "interval": interval_to_json(iv)} for (u, w), iv in labeling.labels.items()
        ],
    }


def labeling_from_json(doc: Mapping[str, Any]) -> IntervalLabeling:
    labels = {(e["from"], e["to"]): interval_from_json(e["interval"]) for e in doc["labels"]}
    return IntervalLabeling(doc["s"], doc["t"], labels)


def valid_paths_to_json(paths: list[ValidPath]) -> list[dict[str, Any]]:
    return [{"path": list(p.path), "interval": interval_to_json(p.witness)} for p in paths]


def minor_to_json(model: MinorModel | None, violation: Violation | None = None) -> dict[str, Any]:
    if model is None:
        return {"k": None, "found": False}
    return {
        "found": True,
        "k": model.k,
        "fan_size": model.fan_size,
        "max_rank": model.max_rank,
        "anchors": list(model.anchors),
        "segments": [sorted(seg) for seg in model.segments],
        "hub": sorted(model.hub),
        "verification": "ok" if violation is None else str(violation),
    }


def report_to_json(report: MotivationReport) -> dict[str, Any]:
    return {
        "min_reward": rational(report.min_reward),
        "argmax_node": report.argmax_node,
        "peak_nodes": list(report.peak_nodes),
        "trace": traversal_to_json(report.trace),
    }


def theorem5_to_json(report: Theorem5Report) -> dict[str, Any]:
    return {
        "p_star": list(report.p_star),
        "property_i": report.property_i,
        "property_ii": report.property_ii,
        "bypasses": [
            {"edge": list(e), "bypass": None if q is None else list(q)} for e, q in report.bypasses.items()
        ],
        "off_path_out_degree": dict(report.off_path_out_degree),
        "unbypassed_edges": [list(e) for e in report.unbypassed_edges],
        "branching_nodes": list(report.branching_nodes),
    }


def cert_to_json(cert: SubgraphCert | None) -> dict[str, Any]:
    if cert is None:
        return {"found": False}
    return {
        "found": True,
        "edges": [list(e) for e in cert.edges],
        "traversal": traversal_to_json(cert.traversal),
        "minimal": cert.minimal,
        "structure": None if cert.structure is None else theorem5_to_json(cert.structure),
    }


def decimal_text(value: Any, digits: int = 12) -> str:
    """Fixed-point text with at most ``digits`` decimals, trailing zeros dropped."""
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = digits + 30
            d = Decimal(value.numerator) / Decimal(value.denominator)
    elif isinstance(value, Decimal):
        d = value
    else:
        d = Decimal(str(value))
    text = f"{d:.{digits}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def partition_to_json(plan: PartitionPlan) -> dict[str, Any]:
    return {
        "c": decimal_text(plan.c),
        "r": decimal_text(plan.r),
        "k": plan.k,
        "steps": [decimal_text(x) for x in plan.steps],
        "bottlenecks": [decimal_text(x) for x in plan.bottlenecks],
        "completion_rate": decimal_text(plan.completion_rate),
    }
