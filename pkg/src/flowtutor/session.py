"""Interactive tutoring state machine.

A session walks a student through Ford-Fulkerson by hand: build a network,
then repeatedly select an augmenting path, choose a flow amount, and update
the residual graph, with every step validated and explained; finally confirm
the maximum flow and propose minimum cuts. Actions are plain mappings with a
``type`` tag (the wire format); illegal or malformed actions produce rejection
feedback and never corrupt the state.

Sessions are values: ``apply_action`` returns a new state, so replaying a
recorded action list from ``new_session`` reproduces every intermediate
snapshot exactly (randomness is derived from the session seed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace
from typing import Any, Callable, Mapping

from . import cuts as cuts_mod
from .edgelist import EdgelistError, parse_edgelist, serialize_edgelist
from .findings import Finding
from .layout import layered_layout, spring_layout
from .network import (
    Edge,
    Flow,
    FlowError,
    FlowNetwork,
    Path,
    ResidualArc,
    augment,
    bottleneck,
    reachable_from,
    residual_graph,
    valid_node_id,
    validate_network,
)
from .strategies import STRATEGY_NAMES, _mix_seed, find_path, find_shortest_path, parse_strategy

GRAPH_CREATION = "graph_creation"
SELECT_PATH = "select_path"
CHOOSE_AMOUNT = "choose_amount"
UPDATE_RESIDUAL = "update_residual"
FINALIZED = "finalized"

STAGES = (GRAPH_CREATION, SELECT_PATH, CHOOSE_AMOUNT, UPDATE_RESIDUAL, FINALIZED)


@dataclass(frozen=True)
class HistoryEntry:
    path: Path
    amount: int

    def to_dict(self) -> dict:
        memo = getattr(self, "_memo", None)
        if memo is None:
            memo = {"path": [a.to_dict() for a in self.path], "amount": self.amount}
            object.__setattr__(self, "_memo", memo)
        return memo


@dataclass(frozen=True)
class SessionState:
    stage: str
    net: FlowNetwork
    flow: Flow
    selected_arcs: tuple[ResidualArc, ...]
    pending_path: Path | None
    pending_amount: int | None
    draft_amount: int | None
    edit_buffer: Mapping[tuple[str, str], int] | None
    history: tuple[HistoryEntry, ...]
    cut_selection: frozenset[str]
    rng_seed: int
    rng_draws: int
    max_flow_confirmed: bool


@dataclass(frozen=True)
class StepFeedback:
    accepted: bool
    messages: tuple[Finding, ...]
    state_delta: dict
    data: dict | None = None


def new_session(seed: int = 0) -> SessionState:
    """A fresh session: empty network, graph-creation stage, zero flow."""
    return SessionState(
        stage=GRAPH_CREATION,
        net=FlowNetwork(nodes=frozenset(), edges=(), source=None, sink=None, positions={}),
        flow=Flow.zero(),
        selected_arcs=(),
        pending_path=None,
        pending_amount=None,
        draft_amount=None,
        edit_buffer=None,
        history=(),
        cut_selection=frozenset(),
        rng_seed=seed,
        rng_draws=0,
        max_flow_confirmed=False,
    )


# ---------------------------------------------------------------------------
# Snapshots


def _stage_label(state: SessionState) -> str:
    if state.stage == GRAPH_CREATION:
        return "graph_creation"
    if state.stage == FINALIZED:
        return "finalized"
    return "iterative"


def _phase_label(state: SessionState) -> str | None:
    return state.stage if state.stage in (SELECT_PATH, CHOOSE_AMOUNT, UPDATE_RESIDUAL) else None


def _residual_or_none(state: SessionState):
    if state.net.source is None or state.net.sink is None or validate_network(state.net):
        return None
    return residual_graph(state.net, state.flow)


def _edges_fragment(state: SessionState) -> list[dict]:
    return [
        {"tail": e.tail, "head": e.head, "capacity": e.capacity, "flow": state.flow.on(e.key)}
        for e in state.net.edges
    ]


def _residual_fragment(state: SessionState) -> list[dict]:
    residual = _residual_or_none(state)
    return [] if residual is None else [a.to_dict() for a in residual.arcs]


def _flow_value_fragment(state: SessionState) -> int:
    if state.net.source is None:
        return 0
    return sum(state.flow.on(e.key) for e in state.net.edges if e.tail == state.net.source)


_BUILDERS: dict[str, Callable[[SessionState], Any]] = {
    "stage": _stage_label,
    "phase": _phase_label,
    "nodes": lambda st: sorted(st.net.nodes),
    "source": lambda st: st.net.source,
    "sink": lambda st: st.net.sink,
    "positions": lambda st: {n: [xy[0], xy[1]] for n, xy in sorted(st.net.positions.items())},
    "edges": _edges_fragment,
    "flow_value": _flow_value_fragment,
    "residual": _residual_fragment,
    "selected_arcs": lambda st: [a.to_dict() for a in st.selected_arcs],
    "pending_path": lambda st: None if st.pending_path is None else [a.to_dict() for a in st.pending_path],
    "pending_amount": lambda st: st.pending_amount,
    "draft_amount": lambda st: st.draft_amount,
    "edit_buffer": lambda st: None
    if st.edit_buffer is None
    else [{"tail": k[0], "head": k[1], "capacity": v} for k, v in sorted(st.edit_buffer.items())],
    "history": lambda st: [entry.to_dict() for entry in st.history],
    "cut_selection": lambda st: sorted(st.cut_selection),
    "max_flow_confirmed": lambda st: st.max_flow_confirmed,
    "rng_seed": lambda st: st.rng_seed,
    "rng_draws": lambda st: st.rng_draws,
}

_FIELD_KEYS: dict[str, tuple[str, ...]] = {
    "stage": ("stage", "phase"),
    "net": ("nodes", "source", "sink", "positions", "edges", "flow_value", "residual"),
    "flow": ("edges", "flow_value", "residual"),
    "selected_arcs": ("selected_arcs",),
    "pending_path": ("pending_path",),
    "pending_amount": ("pending_amount",),
    "draft_amount": ("draft_amount",),
    "edit_buffer": ("edit_buffer",),
    "history": ("history",),
    "cut_selection": ("cut_selection",),
    "rng_seed": ("rng_seed",),
    "rng_draws": ("rng_draws",),
    "max_flow_confirmed": ("max_flow_confirmed",),
}


def snapshot(state: SessionState) -> dict:
    """A self-contained, JSON-ready view of the session: everything a client renders."""
    return {key: build(state) for key, build in _BUILDERS.items()}


def snapshot_json(state: SessionState) -> str:
    """Canonical JSON encoding of the snapshot; byte-stable for replay comparison."""
    return json.dumps(snapshot(state), sort_keys=True, separators=(",", ":"))


def _delta(old: SessionState, new: SessionState) -> dict:
    changed_keys: set[str] = set()
    for f in fields(SessionState):
        if getattr(old, f.name) is not getattr(new, f.name):
            changed_keys.update(_FIELD_KEYS[f.name])
    return {"changed": {key: _BUILDERS[key](new) for key in sorted(changed_keys)}}


def _accept(
    old: SessionState,
    new: SessionState,
    data: dict | None = None,
    messages: tuple[Finding, ...] = (),
) -> tuple[SessionState, StepFeedback]:
    return new, StepFeedback(True, messages, _delta(old, new), data)


def _reject(state: SessionState, *findings: Finding) -> tuple[SessionState, StepFeedback]:
    assert findings, "a rejection must explain itself"
    return state, StepFeedback(False, tuple(findings), {"changed": {}}, None)


# ---------------------------------------------------------------------------
# Action plumbing

_MISSING = object()


def _extract(action: Mapping, spec: dict[str, tuple[type | tuple[type, ...], bool]]):
    """Pull typed parameters out of an action mapping; bool is never accepted as int."""
    params: dict[str, Any] = {}
    problems: list[Finding] = []
    for name, (types, required) in spec.items():
        value = action.get(name, _MISSING)
        if value is _MISSING:
            if required:
                problems.append(Finding("malformed-action", f"missing field {name!r}"))
            else:
                params[name] = None
            continue
        if isinstance(value, bool) and not (types is bool or (isinstance(types, tuple) and bool in types)):
            problems.append(Finding("malformed-action", f"field {name!r} has the wrong type"))
            continue
        if not isinstance(value, types):
            problems.append(Finding("malformed-action", f"field {name!r} has the wrong type"))
            continue
        params[name] = value
    for key in action:
        if key != "type" and key not in spec:
            problems.append(Finding("malformed-action", f"unexpected field {key!r}"))
    return params, problems


def _node_param(state: SessionState, name: str) -> Finding | None:
    if name not in state.net.nodes:
        return Finding("unknown-node", f"no node named {name}", node=name)
    return None


def _replace_net(state: SessionState, **changes) -> SessionState:
    return replace(state, net=replace(state.net, **changes))


# --- graph creation -------------------------------------------------------


def _do_add_node(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["id"]
    if not valid_node_id(name):
        return _reject(state, Finding("bad-node-id", f"invalid node id {name!r}", node=name))
    if name in state.net.nodes:
        return _reject(state, Finding("node-exists", f"node {name} already exists", node=name))
    return _accept(state, _replace_net(state, nodes=state.net.nodes | {name}))


def _do_delete_node(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["id"]
    bad = _node_param(state, name)
    if bad:
        return _reject(state, bad)
    net = state.net
    positions = {n: xy for n, xy in net.positions.items() if n != name}
    return _accept(
        state,
        _replace_net(
            state,
            nodes=net.nodes - {name},
            edges=tuple(e for e in net.edges if name not in (e.tail, e.head)),
            source=None if net.source == name else net.source,
            sink=None if net.sink == name else net.sink,
            positions=positions,
        ),
    )


def _do_add_edge(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    tail, head, capacity = p["tail"], p["head"], p["capacity"]
    findings = [f for f in (_node_param(state, tail), _node_param(state, head)) if f]
    if findings:
        return _reject(state, *findings)
    if tail == head:
        return _reject(state, Finding("self-loop", f"self-loop at {tail}", node=tail))
    if capacity < 0:
        return _reject(
            state, Finding("negative-capacity", f"negative capacity {capacity}", edge=(tail, head), actual=capacity)
        )
    keys = {e.key for e in state.net.edges}
    if (tail, head) in keys:
        return _reject(state, Finding("duplicate-edge", f"edge {tail}->{head} already exists", edge=(tail, head)))
    if (head, tail) in keys:
        return _reject(
            state,
            Finding(
                "anti-parallel-pair",
                f"edge {head}->{tail} already exists; anti-parallel pairs are not allowed",
                edge=(tail, head),
            ),
        )
    return _accept(state, _replace_net(state, edges=state.net.edges + (Edge(tail, head, capacity),)))


def _find_edge(state: SessionState, tail: str, head: str) -> Edge | None:
    return state.net.edge_map().get((tail, head))


def _do_delete_edge(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    tail, head = p["tail"], p["head"]
    if _find_edge(state, tail, head) is None:
        return _reject(state, Finding("unknown-edge", f"no edge {tail}->{head}", edge=(tail, head)))
    return _accept(state, _replace_net(state, edges=tuple(e for e in state.net.edges if e.key != (tail, head))))


def _do_set_capacity(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    tail, head, capacity = p["tail"], p["head"], p["capacity"]
    if _find_edge(state, tail, head) is None:
        return _reject(state, Finding("unknown-edge", f"no edge {tail}->{head}", edge=(tail, head)))
    if capacity < 0:
        return _reject(
            state, Finding("negative-capacity", f"negative capacity {capacity}", edge=(tail, head), actual=capacity)
        )
    edges = tuple(Edge(tail, head, capacity) if e.key == (tail, head) else e for e in state.net.edges)
    return _accept(state, _replace_net(state, edges=edges))


def _do_set_source(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["id"]
    bad = _node_param(state, name)
    if bad:
        return _reject(state, bad)
    if state.net.sink == name:
        return _reject(state, Finding("source-is-sink", f"{name} is already the sink", node=name))
    return _accept(state, _replace_net(state, source=name))


def _do_set_sink(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["id"]
    bad = _node_param(state, name)
    if bad:
        return _reject(state, bad)
    if state.net.source == name:
        return _reject(state, Finding("source-is-sink", f"{name} is already the source", node=name))
    return _accept(state, _replace_net(state, sink=name))


def _do_move_node(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name, x, y = p["id"], float(p["x"]), float(p["y"])
    bad = _node_param(state, name)
    if bad:
        return _reject(state, bad)
    if not (x == x and abs(x) != float("inf") and y == y and abs(y) != float("inf")):
        return _reject(state, Finding("malformed-action", "coordinates must be finite"))
    positions = dict(state.net.positions)
    positions[name] = (x, y)
    return _accept(state, _replace_net(state, positions=positions))


def _do_import_graph(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    try:
        net = parse_edgelist(p["text"])
    except EdgelistError as err:
        return _reject(state, *(Finding("parse-error", str(issue)) for issue in err.issues))
    return _accept(state, replace(state, net=net))


def _do_export_graph(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    return _accept(state, state, data={"edgelist": serialize_edgelist(state.net)})


def _do_apply_layout(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    algorithm = p["algorithm"]
    width = float(p["width"]) if p["width"] is not None else 800.0
    height = float(p["height"]) if p["height"] is not None else 600.0
    seed = p["seed"] if p["seed"] is not None else 0
    try:
        if algorithm == "spring":
            result = spring_layout(state.net, width, height, seed)
        elif algorithm == "layered":
            result = layered_layout(state.net, width, height)
        else:
            return _reject(
                state, Finding("malformed-action", f"unknown layout {algorithm!r}; expected spring or layered")
            )
    except FlowError as err:
        return _reject(state, Finding("layout-failed", str(err)))
    return _accept(state, _replace_net(state, positions=result.positions))


def _do_confirm_graph(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    violations = validate_network(state.net)
    if violations:
        return _reject(state, *violations)
    assert state.net.source is not None and state.net.sink is not None
    if state.net.sink not in reachable_from(state.net, state.net.source):
        return _reject(
            state,
            Finding(
                "sink-unreachable",
                f"sink {state.net.sink} is not reachable from source {state.net.source}",
                node=state.net.sink,
            ),
        )
    return _accept(state, replace(state, stage=SELECT_PATH))


# --- select path ----------------------------------------------------------


def _do_select_arc(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    tail, head = p["tail"], p["head"]
    residual = residual_graph(state.net, state.flow)
    arc = residual.arc_at(tail, head)
    if arc is None:
        return _reject(
            state,
            Finding("unknown-arc", f"{tail}->{head} is not an arc of the current residual graph", edge=(tail, head)),
        )
    if any(a.key == arc.key for a in state.selected_arcs):
        return _accept(state, state)  # idempotent
    return _accept(state, replace(state, selected_arcs=state.selected_arcs + (arc,)))


def _do_deselect_arc(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    key = (p["tail"], p["head"])
    kept = tuple(a for a in state.selected_arcs if a.key != key)
    if len(kept) == len(state.selected_arcs):
        return _accept(state, state)  # idempotent
    return _accept(state, replace(state, selected_arcs=kept))


def _assemble_path(state: SessionState) -> tuple[Path | None, list[Finding]]:
    """Order an unordered arc selection into one simple source-to-sink path."""
    arcs = state.selected_arcs
    source, sink = state.net.source, state.net.sink
    if not arcs:
        return None, [Finding("empty-selection", "no arcs selected")]
    findings: list[Finding] = []
    by_tail: dict[str, list[ResidualArc]] = {}
    for a in arcs:
        by_tail.setdefault(a.tail, []).append(a)
    for node in sorted(by_tail):
        if len(by_tail[node]) > 1:
            findings.append(
                Finding("path-branches", f"more than one selected arc leaves {node}", node=node)
            )
    if findings:
        return None, findings
    if source not in by_tail:
        return None, [Finding("path-start", f"no selected arc leaves the source {source}", node=source)]
    chain: list[ResidualArc] = []
    remaining = {a.key: a for a in arcs}
    visited = {source}
    node = source
    while node in by_tail and by_tail[node][0].key in remaining:
        arc = by_tail[node][0]
        del remaining[arc.key]
        chain.append(arc)
        node = arc.head
        if node in visited:
            return None, [Finding("path-revisits-node", f"path visits {node} more than once", node=node)]
        visited.add(node)
        if node == sink:
            break
    if node != sink:
        if remaining:
            gap = min(remaining.values(), key=lambda a: a.key)
            return None, [
                Finding(
                    "path-disconnected",
                    f"path is disconnected between {node} and {gap.tail}",
                    node=node,
                )
            ]
        return None, [Finding("path-end", f"path ends at {node} before reaching the sink {sink}", node=node)]
    if remaining:
        return None, [
            Finding("redundant-edge", f"redundant edge {a.tail}->{a.head}", edge=a.key)
            for a in sorted(remaining.values(), key=lambda a: a.key)
        ]
    return tuple(chain), []


def _do_validate_path(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    residual = residual_graph(state.net, state.flow)
    stale = [
        Finding("unknown-arc", f"{a.tail}->{a.head} is not an arc of the current residual graph", edge=a.key)
        for a in state.selected_arcs
        if residual.arc_at(a.tail, a.head) != a
    ]
    if stale:
        return _reject(state, *stale)
    path, findings = _assemble_path(state)
    if path is None:
        return _reject(state, *findings)
    return _accept(state, replace(state, pending_path=path, stage=CHOOSE_AMOUNT))


def _do_auto_path(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["strategy"]
    if name not in STRATEGY_NAMES:
        return _reject(
            state,
            Finding("malformed-action", f"unknown strategy {name!r}; expected one of {', '.join(STRATEGY_NAMES)}"),
        )
    residual = residual_graph(state.net, state.flow)
    draws = state.rng_draws
    if name == "random":
        strategy = parse_strategy(name, seed=_mix_seed(state.rng_seed, draws))
        draws += 1
    else:
        strategy = parse_strategy(name)
    path = find_path(residual, strategy)
    if path is None:
        return _reject(state, Finding("no-augmenting-path", "no augmenting path exists in the residual graph"))
    new = replace(state, selected_arcs=path, pending_path=path, stage=CHOOSE_AMOUNT, rng_draws=draws)
    return _accept(state, new, data={"path": [a.to_dict() for a in path]})


# --- choose amount ----------------------------------------------------------


def _do_highlight_bottleneck(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    assert state.pending_path is not None
    result = bottleneck(state.pending_path)
    return _accept(
        state, state, data={"bottleneck": result.value, "arcs": [a.to_dict() for a in result.witnesses]}
    )


def _do_set_amount(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    amount = p["amount"]
    if amount <= 0:
        return _reject(state, Finding("amount-not-positive", f"flow amount must be positive, got {amount}"))
    return _accept(state, replace(state, draft_amount=amount))


def _do_confirm_amount(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    assert state.pending_path is not None
    amount = p["amount"] if p["amount"] is not None else state.draft_amount
    if amount is None:
        return _reject(state, Finding("malformed-action", "no amount given and none set earlier"))
    if amount <= 0:
        return _reject(state, Finding("amount-not-positive", f"flow amount must be positive, got {amount}"))
    limit = bottleneck(state.pending_path).value
    if amount > limit:
        return _reject(
            state,
            Finding(
                "amount-exceeds-bottleneck",
                f"flow amount {amount} is greater than the bottleneck residual capacity {limit}",
                expected=limit,
                actual=amount,
            ),
        )
    buffer = {a.key: a.capacity for a in residual_graph(state.net, state.flow).arcs}
    return _accept(
        state,
        replace(state, pending_amount=amount, draft_amount=amount, edit_buffer=buffer, stage=UPDATE_RESIDUAL),
    )


# --- update residual --------------------------------------------------------


def _do_edit_residual_arc(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    tail, head, capacity = p["tail"], p["head"], p["capacity"]
    findings = [f for f in (_node_param(state, tail), _node_param(state, head)) if f]
    if findings:
        return _reject(state, *findings)
    if capacity < 0:
        return _reject(
            state,
            Finding("negative-capacity", "residual capacity cannot be negative", edge=(tail, head), actual=capacity),
        )
    assert state.edit_buffer is not None
    buffer = dict(state.edit_buffer)
    buffer[(tail, head)] = capacity
    return _accept(state, replace(state, edit_buffer=buffer))


def _expected_after_augment(state: SessionState) -> tuple[Flow, dict[tuple[str, str], int]]:
    assert state.pending_path is not None and state.pending_amount is not None
    updated = augment(state.net, state.flow, state.pending_path, state.pending_amount)
    expected = {a.key: a.capacity for a in residual_graph(state.net, updated).arcs}
    return updated, expected


def _commit(state: SessionState, updated: Flow) -> SessionState:
    assert state.pending_path is not None and state.pending_amount is not None
    return replace(
        state,
        flow=updated,
        history=state.history + (HistoryEntry(state.pending_path, state.pending_amount),),
        selected_arcs=(),
        pending_path=None,
        pending_amount=None,
        draft_amount=None,
        edit_buffer=None,
        stage=SELECT_PATH,
    )


def _do_validate_residual(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    assert state.edit_buffer is not None
    updated, expected = _expected_after_augment(state)
    actual = {k: v for k, v in state.edit_buffer.items() if v != 0}
    findings: list[Finding] = []
    for key in sorted(set(expected) | set(actual)):
        tail, head = key
        if key not in actual:
            findings.append(Finding("missing-arc", f"missing residual arc {tail}->{head}", edge=key))
        elif key not in expected:
            findings.append(
                Finding(
                    "extraneous-arc",
                    f"there is no residual arc {tail}->{head}",
                    edge=key,
                    actual=actual[key],
                )
            )
        elif expected[key] != actual[key]:
            findings.append(
                Finding(
                    "wrong-capacity",
                    f"wrong residual capacity on {tail}->{head}",
                    edge=key,
                    actual=actual[key],
                )
            )
    if findings:
        return _reject(state, *findings)
    return _accept(state, _commit(state, updated))


def _do_auto_residual(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    updated, _ = _expected_after_augment(state)
    return _accept(state, _commit(state, updated))


# --- finalization -----------------------------------------------------------


def _do_confirm_max_flow(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    value = p["value"]
    residual = residual_graph(state.net, state.flow)
    if find_shortest_path(residual) is not None:
        return _reject(
            state,
            Finding(
                "augmenting-path-exists",
                "an augmenting path still exists; continue finding augmenting paths",
            ),
        )
    if value != _flow_value_fragment(state):
        # Deliberately does not reveal the correct value: this is a self-test.
        return _reject(state, Finding("value-incorrect", "that is not the value of the current flow"))
    # path selection is over; the finalized stage selects cut nodes instead
    new = replace(state, stage=FINALIZED, max_flow_confirmed=True, selected_arcs=())
    return _accept(state, new, data={"value": value})


def _do_toggle_cut_node(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    name = p["id"]
    bad = _node_param(state, name)
    if bad:
        return _reject(state, bad)
    selection = state.cut_selection ^ {name}
    return _accept(state, replace(state, cut_selection=selection))


def _do_validate_cut(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    if not state.cut_selection:
        return _reject(state, Finding("cut-empty", "select at least one node to propose a cut"))
    if state.cut_selection == state.net.nodes:
        return _reject(state, Finding("cut-improper", "selection must be a proper subset of the nodes"))
    verdict = cuts_mod.validate_cut(state.net, state.cut_selection)
    if verdict.valid:
        return _accept(state, state, data=verdict.to_dict())
    return state, StepFeedback(False, verdict.diagnostics, {"changed": {}}, verdict.to_dict())


def _do_find_min_cut(state: SessionState, p) -> tuple[SessionState, StepFeedback]:
    cut = cuts_mod.find_min_cut(state.net)
    new = replace(state, cut_selection=cut.s_side)
    return _accept(state, new, data={"s_side": sorted(cut.s_side), "capacity": cut.capacity})


# ---------------------------------------------------------------------------
# Dispatch table

_ALL_STAGES = frozenset(STAGES)

_ACTIONS: dict[str, tuple[Callable, frozenset[str], dict]] = {
    "add_node": (_do_add_node, frozenset({GRAPH_CREATION}), {"id": (str, True)}),
    "delete_node": (_do_delete_node, frozenset({GRAPH_CREATION}), {"id": (str, True)}),
    "add_edge": (
        _do_add_edge,
        frozenset({GRAPH_CREATION}),
        {"tail": (str, True), "head": (str, True), "capacity": (int, True)},
    ),
    "delete_edge": (_do_delete_edge, frozenset({GRAPH_CREATION}), {"tail": (str, True), "head": (str, True)}),
    "set_capacity": (
        _do_set_capacity,
        frozenset({GRAPH_CREATION}),
        {"tail": (str, True), "head": (str, True), "capacity": (int, True)},
    ),
    "set_source": (_do_set_source, frozenset({GRAPH_CREATION}), {"id": (str, True)}),
    "set_sink": (_do_set_sink, frozenset({GRAPH_CREATION}), {"id": (str, True)}),
    "move_node": (
        _do_move_node,
        _ALL_STAGES,
        {"id": (str, True), "x": ((int, float), True), "y": ((int, float), True)},
    ),
    "import_graph": (_do_import_graph, frozenset({GRAPH_CREATION}), {"text": (str, True)}),
    "export_graph": (_do_export_graph, _ALL_STAGES, {}),
    "apply_layout": (
        _do_apply_layout,
        frozenset({GRAPH_CREATION}),
        {
            "algorithm": (str, True),
            "width": ((int, float), False),
            "height": ((int, float), False),
            "seed": (int, False),
        },
    ),
    "confirm_graph": (_do_confirm_graph, frozenset({GRAPH_CREATION}), {}),
    "select_arc": (_do_select_arc, frozenset({SELECT_PATH}), {"tail": (str, True), "head": (str, True)}),
    "deselect_arc": (_do_deselect_arc, frozenset({SELECT_PATH}), {"tail": (str, True), "head": (str, True)}),
    "validate_path": (_do_validate_path, frozenset({SELECT_PATH}), {}),
    "auto_path": (_do_auto_path, frozenset({SELECT_PATH}), {"strategy": (str, True)}),
    "highlight_bottleneck": (_do_highlight_bottleneck, frozenset({CHOOSE_AMOUNT}), {}),
    "set_amount": (_do_set_amount, frozenset({CHOOSE_AMOUNT}), {"amount": (int, True)}),
    "confirm_amount": (_do_confirm_amount, frozenset({CHOOSE_AMOUNT}), {"amount": (int, False)}),
    "edit_residual_arc": (
        _do_edit_residual_arc,
        frozenset({UPDATE_RESIDUAL}),
        {"tail": (str, True), "head": (str, True), "capacity": (int, True)},
    ),
    "validate_residual": (_do_validate_residual, frozenset({UPDATE_RESIDUAL}), {}),
    "auto_residual": (_do_auto_residual, frozenset({UPDATE_RESIDUAL}), {}),
    "confirm_max_flow": (_do_confirm_max_flow, frozenset({SELECT_PATH}), {"value": (int, True)}),
    "toggle_cut_node": (_do_toggle_cut_node, frozenset({FINALIZED}), {"id": (str, True)}),
    "validate_cut": (_do_validate_cut, frozenset({FINALIZED}), {}),
    "find_min_cut": (_do_find_min_cut, frozenset({FINALIZED}), {}),
}

ACTION_TYPES = tuple(sorted(_ACTIONS))


def apply_action(state: SessionState, action: Mapping) -> tuple[SessionState, StepFeedback]:
    """Apply one action; rejections return the state unchanged with an explanation."""
    if not isinstance(action, Mapping) or not isinstance(action.get("type"), str):
        return _reject(state, Finding("malformed-action", "action must be an object with a string 'type'"))
    kind = action["type"]
    entry = _ACTIONS.get(kind)
    if entry is None:
        return _reject(state, Finding("unknown-action", f"unknown action type {kind!r}"))
    handler, stages, spec = entry
    if state.stage not in stages:
        return _reject(
            state,
            Finding("action-not-allowed", f"action {kind} is not valid in the {state.stage} stage"),
        )
    params, problems = _extract(action, spec)
    if problems:
        return _reject(state, *problems)
    return handler(state, params)


def replay(actions: list[Mapping], seed: int = 0) -> tuple[SessionState, list[StepFeedback]]:
    """Apply a recorded action list to a fresh session."""
    state = new_session(seed)
    feedback: list[StepFeedback] = []
    for action in actions:
        state, fb = apply_action(state, action)
        feedback.append(fb)
    return state, feedback
