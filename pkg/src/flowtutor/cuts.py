"""Minimum-cut computation and validation of user-proposed cuts.

A proposed node set is interpreted as the s-side or the t-side of a cut and
judged against the true maximum-flow value, with per-edge witnesses explaining
why a non-minimum cut fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

from .findings import Finding
from .network import Edge, Flow, FlowError, FlowNetwork, require_valid, residual_graph
from .strategies import Shortest, solve

SSIDE: Literal["s-side"] = "s-side"
TSIDE: Literal["t-side"] = "t-side"
UNINTERPRETABLE: Literal["uninterpretable"] = "uninterpretable"


@dataclass(frozen=True)
class Cut:
    s_side: frozenset[str]
    capacity: int


@dataclass(frozen=True)
class CutVerdict:
    interpretation: str
    valid: bool
    proposed_capacity: int | None
    max_flow_value: int
    diagnostics: tuple[Finding, ...]

    def to_dict(self) -> dict:
        return {
            "interpretation": self.interpretation,
            "valid": self.valid,
            "proposed_capacity": self.proposed_capacity,
            "max_flow_value": self.max_flow_value,
            "diagnostics": [f.to_dict() for f in self.diagnostics],
        }


def cut_capacity(net: FlowNetwork, s_side: Iterable[str]) -> int:
    """Total capacity of edges leaving ``s_side``; edges entering it count nothing."""
    side = frozenset(s_side)
    unknown = side - net.nodes
    if unknown:
        raise FlowError(f"cut side contains unknown nodes: {', '.join(sorted(unknown))}")
    if net.source not in side:
        raise FlowError("cut side must contain the source")
    if net.sink in side:
        raise FlowError("cut side must not contain the sink")
    return sum(e.capacity for e in net.edges if e.tail in side and e.head not in side)


@lru_cache(maxsize=2048)
def _max_flow(edges: tuple[Edge, ...], nodes: frozenset[str], source: str, sink: str) -> tuple[int, Flow]:
    net = FlowNetwork(nodes=nodes, edges=edges, source=source, sink=sink)
    result = solve(net, Shortest())
    return result.value, result.flow


def _solve_for_analysis(net: FlowNetwork) -> tuple[int, Flow]:
    # Verdicts depend only on the network, so the internal max flow is
    # memoized on the network's algorithmic identity (positions excluded).
    return _max_flow(net.edges, net.nodes, net.source, net.sink)  # type: ignore[arg-type]


def find_min_cut(net: FlowNetwork) -> Cut:
    """The minimum cut whose s-side is smallest: nodes residual-reachable from the source."""
    require_valid(net)
    value, flow = _solve_for_analysis(net)
    residual = residual_graph(net, flow)
    side = {net.source}
    stack = [net.source]
    while stack:
        u = stack.pop()
        for arc in residual.arcs_from(u):
            if arc.head not in side:
                side.add(arc.head)
                stack.append(arc.head)
    capacity = cut_capacity(net, side)
    assert capacity == value, "max-flow/min-cut duality violated"
    return Cut(s_side=frozenset(side), capacity=capacity)


def validate_cut(net: FlowNetwork, selected: Iterable[str]) -> CutVerdict:
    """Judge a selected node set as the s-side or t-side of a minimum cut.

    A selection containing the source (and not the sink) is read as the
    s-side; one containing the sink (and not the source) as the t-side.
    Failures carry the capacity gap plus per-edge witnesses: crossing edges
    left unsaturated by a maximum flow, and edges returning positive flow
    into the s-side.
    """
    require_valid(net)
    chosen = frozenset(selected)
    if not chosen:
        raise FlowError("selection is empty")
    unknown = chosen - net.nodes
    if unknown:
        raise FlowError(f"selection contains unknown nodes: {', '.join(sorted(unknown))}")
    if chosen == net.nodes:
        raise FlowError("selection must be a proper subset of the nodes")

    value, flow = _solve_for_analysis(net)

    has_source = net.source in chosen
    has_sink = net.sink in chosen
    if has_source == has_sink:
        which = "both" if has_source else "neither"
        return CutVerdict(
            interpretation=UNINTERPRETABLE,
            valid=False,
            proposed_capacity=None,
            max_flow_value=value,
            diagnostics=(
                Finding(
                    "cut-uninterpretable",
                    f"selection contains {which} of source and sink, so it is neither side of an s-t cut",
                ),
            ),
        )
    if has_source:
        interpretation, side = SSIDE, chosen
    else:
        interpretation, side = TSIDE, net.nodes - chosen

    proposed = cut_capacity(net, side)
    if proposed == value:
        return CutVerdict(interpretation, True, proposed, value, ())

    diagnostics: list[Finding] = [
        Finding(
            "capacity-gap",
            f"proposed cut capacity {proposed} does not equal the maximum flow value {value}",
            expected=value,
            actual=proposed,
        )
    ]
    crossing = [e for e in net.edges if e.tail in side and e.head not in side]
    for e in crossing:
        diagnostics.append(
            Finding(
                "crossing-edge",
                f"{e.tail}->{e.head} crosses the cut with capacity {e.capacity}",
                edge=e.key,
                actual=e.capacity,
            )
        )
    for e in crossing:
        if flow.on(e.key) < e.capacity:
            diagnostics.append(
                Finding(
                    "unsaturated-crossing-edge",
                    f"{e.tail}->{e.head} crosses the cut but a maximum flow leaves it unsaturated "
                    f"({flow.on(e.key)} of {e.capacity})",
                    edge=e.key,
                    expected=e.capacity,
                    actual=flow.on(e.key),
                )
            )
    for e in net.edges:
        if e.head in side and e.tail not in side and flow.on(e.key) > 0:
            diagnostics.append(
                Finding(
                    "returning-flow-edge",
                    f"{e.tail}->{e.head} carries {flow.on(e.key)} units back into the proposed s-side",
                    edge=e.key,
                    actual=flow.on(e.key),
                )
            )
    return CutVerdict(interpretation, False, proposed, value, tuple(diagnostics))
