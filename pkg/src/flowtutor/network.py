"""Value-semantic flow-network model.

Directed networks with nonnegative integer capacities, flow-law checking,
residual graphs with forward/backward arc provenance, bottlenecks, and path
augmentation. Everything here is a pure function over immutable values; no
operation mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, NamedTuple

from .findings import Finding

EdgeKey = tuple[str, str]

FORWARD: Literal["forward"] = "forward"
BACKWARD: Literal["backward"] = "backward"

# Directive keywords of the edgelist format double as reserved node names so
# that every network can be written to a file and read back unambiguously.
RESERVED_NODE_IDS = frozenset({"source", "sink", "node", "pos"})


class FlowError(ValueError):
    """Raised when an operation is applied to inputs violating its contract."""


def valid_node_id(token: object) -> bool:
    return (
        isinstance(token, str)
        and token != ""
        and not any(ch.isspace() for ch in token)
        and token not in RESERVED_NODE_IDS
        and not token.startswith("#")
    )


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    capacity: int

    @property
    def key(self) -> EdgeKey:
        return (self.tail, self.head)


@dataclass(frozen=True)
class FlowNetwork:
    """A directed capacitated graph with designated source and sink.

    ``source``/``sink`` are None only while a network is still being drafted
    (e.g. during interactive graph creation); `validate_network` reports them
    as violations until set.
    """

    nodes: frozenset[str]
    edges: tuple[Edge, ...]
    source: str | None
    sink: str | None
    positions: Mapping[str, tuple[float, float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        # Edge order is not semantic; keep a canonical order so equal
        # networks compare equal however they were assembled.
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.key)))

    @staticmethod
    def build(
        edges: Iterable[tuple[str, str, int]],
        source: str | None,
        sink: str | None,
        nodes: Iterable[str] = (),
        positions: Mapping[str, tuple[float, float]] | None = None,
    ) -> "FlowNetwork":
        """Construct a network, collecting node set from edge endpoints."""
        edge_objs = tuple(Edge(t, h, c) for t, h, c in edges)
        node_set = set(nodes)
        for e in edge_objs:
            node_set.add(e.tail)
            node_set.add(e.head)
        if source is not None:
            node_set.add(source)
        if sink is not None:
            node_set.add(sink)
        return FlowNetwork(
            nodes=frozenset(node_set),
            edges=edge_objs,
            source=source,
            sink=sink,
            positions=dict(positions or {}),
        )

    def edge_map(self) -> dict[EdgeKey, Edge]:
        return {e.key: e for e in self.edges}

    def out_edges(self, node: str) -> list[Edge]:
        return [e for e in self.edges if e.tail == node]

    def in_edges(self, node: str) -> list[Edge]:
        return [e for e in self.edges if e.head == node]


def validate_network(net: FlowNetwork) -> list[Finding]:
    """Check every structural invariant; an empty list means the network is valid.

    Each violation names the offending element, so the result doubles as user
    feedback during graph construction.
    """
    out: list[Finding] = []
    for n in sorted(net.nodes):
        if not valid_node_id(n):
            out.append(Finding("bad-node-id", f"invalid node id {n!r}", node=n))
    seen: set[EdgeKey] = set()
    for e in net.edges:
        if e.tail == e.head:
            out.append(Finding("self-loop", f"self-loop at {e.tail}", node=e.tail, edge=e.key))
        if e.key in seen:
            out.append(Finding("duplicate-edge", f"duplicate edge {e.tail}->{e.head}", edge=e.key))
        elif (e.head, e.tail) in seen:
            out.append(
                Finding(
                    "anti-parallel-pair",
                    f"anti-parallel pair ({e.head},{e.tail})",
                    edge=e.key,
                )
            )
        seen.add(e.key)
        for endpoint in (e.tail, e.head):
            if endpoint not in net.nodes:
                out.append(
                    Finding(
                        "dangling-endpoint",
                        f"edge {e.tail}->{e.head} uses undeclared node {endpoint}",
                        node=endpoint,
                        edge=e.key,
                    )
                )
        if not isinstance(e.capacity, int) or isinstance(e.capacity, bool):
            out.append(
                Finding("non-integer-capacity", f"capacity of {e.tail}->{e.head} is not an integer", edge=e.key)
            )
        elif e.capacity < 0:
            out.append(
                Finding(
                    "negative-capacity",
                    f"negative capacity {e.capacity} on {e.tail}->{e.head}",
                    edge=e.key,
                    actual=e.capacity,
                )
            )
    if net.source is None:
        out.append(Finding("missing-source", "no source designated"))
    elif net.source not in net.nodes:
        out.append(Finding("missing-source", f"source {net.source} is not a node", node=net.source))
    if net.sink is None:
        out.append(Finding("missing-sink", "no sink designated"))
    elif net.sink not in net.nodes:
        out.append(Finding("missing-sink", f"sink {net.sink} is not a node", node=net.sink))
    if net.source is not None and net.source == net.sink:
        out.append(Finding("source-is-sink", f"source and sink are both {net.source}", node=net.source))
    for n in net.positions:
        if n not in net.nodes:
            out.append(Finding("dangling-endpoint", f"position given for unknown node {n}", node=n))
    return out


def require_valid(net: FlowNetwork) -> None:
    violations = validate_network(net)
    if violations:
        raise FlowError("invalid network: " + "; ".join(v.message for v in violations))


@dataclass(frozen=True)
class Flow:
    """Per-edge flow assignment. Edges absent from ``values`` carry zero flow."""

    values: Mapping[EdgeKey, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        # Normalize: explicit zeros and implicit zeros compare equal.
        object.__setattr__(self, "values", {k: v for k, v in self.values.items() if v != 0})

    @staticmethod
    def zero() -> "Flow":
        return Flow({})

    def on(self, key: EdgeKey) -> int:
        return self.values.get(key, 0)


def check_flow(net: FlowNetwork, flow: Flow) -> list[Finding]:
    """Check non-negativity, capacity, and conservation; empty list means valid."""
    out: list[Finding] = []
    edge_map = net.edge_map()
    for key, v in sorted(flow.values.items()):
        if key not in edge_map:
            out.append(Finding("unknown-edge", f"flow on unknown edge {key[0]}->{key[1]}", edge=key))
            continue
        if v < 0:
            out.append(Finding("negative-flow", f"negative flow {v} on {key[0]}->{key[1]}", edge=key, actual=v))
        elif v > edge_map[key].capacity:
            out.append(
                Finding(
                    "capacity-exceeded",
                    f"capacity exceeded on {key[0]}->{key[1]}: {v} > {edge_map[key].capacity}",
                    edge=key,
                    expected=edge_map[key].capacity,
                    actual=v,
                )
            )
    for node in sorted(net.nodes):
        if node == net.source or node == net.sink:
            continue
        inflow = sum(flow.on(e.key) for e in net.edges if e.head == node)
        outflow = sum(flow.on(e.key) for e in net.edges if e.tail == node)
        if inflow != outflow:
            out.append(
                Finding(
                    "conservation-violated",
                    f"conservation at {node}: inflow {inflow} != outflow {outflow}",
                    node=node,
                    expected=inflow,
                    actual=outflow,
                )
            )
    return out


def flow_value(net: FlowNetwork, flow: Flow) -> int:
    """Value of the flow: total leaving the source, which must equal the total entering the sink."""
    violations = check_flow(net, flow)
    if violations:
        raise FlowError(f"invalid flow: {violations[0].message}")
    at_source = sum(flow.on(e.key) for e in net.edges if e.tail == net.source)
    at_sink = sum(flow.on(e.key) for e in net.edges if e.head == net.sink)
    if at_source != at_sink:
        # Only reachable for hand-built flows that push a circulation through
        # the source or sink; augmentation from zero flow can never do this.
        raise FlowError(f"flow value mismatch: {at_source} out of source, {at_sink} into sink")
    return at_source


@dataclass(frozen=True)
class ResidualArc:
    """One arc of a residual graph, tagged with the original edge it derives from."""

    tail: str
    head: str
    capacity: int
    kind: Literal["forward", "backward"]
    origin: EdgeKey

    @property
    def key(self) -> EdgeKey:
        return (self.tail, self.head)

    def to_dict(self) -> dict:
        return {
            "tail": self.tail,
            "head": self.head,
            "capacity": self.capacity,
            "kind": self.kind,
            "origin": [self.origin[0], self.origin[1]],
        }


@dataclass(frozen=True)
class ResidualGraph:
    """Positive-capacity residual arcs of a network under a given flow.

    Because anti-parallel original edges are rejected, each directed pair
    (tail, head) carries at most one arc, so arcs are addressable by pair.
    """

    arcs: tuple[ResidualArc, ...]
    source: str
    sink: str
    nodes: frozenset[str]

    def arcs_from(self, node: str) -> tuple[ResidualArc, ...]:
        return self._by_tail.get(node, ())

    def arc_at(self, tail: str, head: str) -> ResidualArc | None:
        return self._by_key.get((tail, head))

    def __post_init__(self) -> None:
        by_tail: dict[str, list[ResidualArc]] = {}
        by_key: dict[EdgeKey, ResidualArc] = {}
        for arc in self.arcs:
            by_tail.setdefault(arc.tail, []).append(arc)
            by_key[arc.key] = arc
        object.__setattr__(
            self, "_by_tail", {t: tuple(sorted(arcs, key=lambda a: a.head)) for t, arcs in by_tail.items()}
        )
        object.__setattr__(self, "_by_key", by_key)


def residual_graph(net: FlowNetwork, flow: Flow) -> ResidualGraph:
    """Derive the residual graph; arcs with zero residual capacity are absent."""
    violations = check_flow(net, flow)
    if violations:
        raise FlowError(f"invalid flow: {violations[0].message}")
    if net.source is None or net.sink is None:
        raise FlowError("network has no source/sink")
    arcs: list[ResidualArc] = []
    for e in net.edges:
        f = flow.on(e.key)
        if e.capacity - f > 0:
            arcs.append(ResidualArc(e.tail, e.head, e.capacity - f, FORWARD, e.key))
        if f > 0:
            arcs.append(ResidualArc(e.head, e.tail, f, BACKWARD, e.key))
    arcs.sort(key=lambda a: a.key)
    return ResidualGraph(tuple(arcs), net.source, net.sink, net.nodes)


Path = tuple[ResidualArc, ...]


def check_path(residual: ResidualGraph, arcs: Iterable[ResidualArc]) -> list[Finding]:
    """Check that ``arcs`` is, in order, a simple source-to-sink path of current residual arcs."""
    path = tuple(arcs)
    if not path:
        return [Finding("empty-path", "path has no arcs")]
    out: list[Finding] = []
    for arc in path:
        live = residual.arc_at(arc.tail, arc.head)
        if live is None or live.kind != arc.kind or live.origin != arc.origin:
            out.append(
                Finding(
                    "unknown-arc",
                    f"{arc.tail}->{arc.head} is not an arc of the current residual graph",
                    edge=arc.key,
                )
            )
    if out:
        return out
    if path[0].tail != residual.source:
        out.append(
            Finding(
                "path-start",
                f"path starts at {path[0].tail}, not the source {residual.source}",
                node=path[0].tail,
            )
        )
    for prev, nxt in zip(path, path[1:]):
        if prev.head != nxt.tail:
            out.append(
                Finding(
                    "path-disconnected",
                    f"path is disconnected between {prev.head} and {nxt.tail}",
                    node=prev.head,
                )
            )
    if path[-1].head != residual.sink:
        out.append(
            Finding(
                "path-end",
                f"path ends at {path[-1].head}, not the sink {residual.sink}",
                node=path[-1].head,
            )
        )
    visited = [path[0].tail] + [a.head for a in path]
    dupes = {n for n in visited if visited.count(n) > 1}
    for n in sorted(dupes):
        out.append(Finding("path-revisits-node", f"path visits {n} more than once", node=n))
    return out


class BottleneckResult(NamedTuple):
    value: int
    witnesses: tuple[ResidualArc, ...]


def bottleneck(path: Iterable[ResidualArc]) -> BottleneckResult:
    """Minimum residual capacity along a path, with the arcs attaining it."""
    arcs = tuple(path)
    if not arcs:
        raise FlowError("bottleneck of an empty path")
    value = min(a.capacity for a in arcs)
    return BottleneckResult(value, tuple(a for a in arcs if a.capacity == value))


def augment(net: FlowNetwork, flow: Flow, path: Iterable[ResidualArc], amount: int) -> Flow:
    """Push ``amount`` units along an augmenting path, returning the updated flow.

    Forward arcs add to their original edge, backward arcs subtract. The
    amount must be a positive integer no greater than the path bottleneck.
    """
    residual = residual_graph(net, flow)
    arcs = tuple(path)
    problems = check_path(residual, arcs)
    if problems:
        raise FlowError(f"invalid augmenting path: {problems[0].message}")
    if not isinstance(amount, int) or isinstance(amount, bool) or amount <= 0:
        raise FlowError(f"flow amount must be a positive integer, got {amount!r}")
    # Stored capacities may be stale; judge against the live residual graph.
    live = tuple(residual.arc_at(a.tail, a.head) for a in arcs)
    limit = min(a.capacity for a in live)  # type: ignore[union-attr]
    if amount > limit:
        raise FlowError(f"amount {amount} exceeds the bottleneck residual capacity {limit}")
    values = dict(flow.values)
    for arc in live:
        assert arc is not None
        if arc.kind == FORWARD:
            values[arc.origin] = values.get(arc.origin, 0) + amount
        else:
            values[arc.origin] = values.get(arc.origin, 0) - amount
    updated = Flow(values)
    assert not check_flow(net, updated), "augmentation produced an invalid flow"
    assert flow_value(net, updated) == flow_value(net, flow) + amount
    return updated


def reachable_from(net: FlowNetwork, start: str) -> frozenset[str]:
    """Nodes reachable from ``start`` following original edge directions."""
    adjacency: dict[str, list[str]] = {}
    for e in net.edges:
        adjacency.setdefault(e.tail, []).append(e.head)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adjacency.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)
