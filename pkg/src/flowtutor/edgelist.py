"""Line-oriented edgelist files: parsing with line-numbered errors, canonical serialization.

Grammar, one record per line:

    # comment
    source <id>
    sink <id>
    node <id>
    pos <id> <x> <y>
    <tail> <head> <capacity>

Blank lines are ignored. ``source``/``sink`` may each appear at most once.
Nodes are declared implicitly by mention; ``node`` exists so isolated nodes
survive a round trip. The serializer emits a canonical order (source, sink,
node, pos, edges; each group sorted), so serialize . parse . serialize is a
fixpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .network import FlowNetwork, valid_node_id, validate_network


@dataclass(frozen=True)
class ParseIssue:
    line: int  # 1-based; 0 for document-level issues
    message: str

    def __str__(self) -> str:
        where = f"line {self.line}" if self.line else "document"
        return f"{where}: {self.message}"


class EdgelistError(ValueError):
    def __init__(self, issues: list[ParseIssue]):
        self.issues = issues
        super().__init__("; ".join(str(i) for i in issues))


_DIRECTIVES = ("source", "sink", "node", "pos")


def parse_edgelist(text: str) -> FlowNetwork:
    """Parse an edgelist document; raises EdgelistError listing every problem found."""
    issues: list[ParseIssue] = []
    nodes: set[str] = set()
    edges: list[tuple[str, str, int]] = []
    edge_keys: set[tuple[str, str]] = set()
    positions: dict[str, tuple[float, float]] = {}
    source: str | None = None
    sink: str | None = None
    source_line = sink_line = 0

    def mention(token: str, line_no: int) -> str | None:
        if not valid_node_id(token):
            issues.append(ParseIssue(line_no, f"invalid node id {token!r}"))
            return None
        nodes.add(token)
        return token

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        word = tokens[0]
        if word in ("source", "sink"):
            if len(tokens) != 2:
                issues.append(ParseIssue(line_no, f"{word} directive needs exactly one node id"))
                continue
            node = mention(tokens[1], line_no)
            if node is None:
                continue
            if word == "source":
                if source is not None:
                    issues.append(ParseIssue(line_no, f"duplicate source directive (first at line {source_line})"))
                else:
                    source, source_line = node, line_no
            else:
                if sink is not None:
                    issues.append(ParseIssue(line_no, f"duplicate sink directive (first at line {sink_line})"))
                else:
                    sink, sink_line = node, line_no
            if source is not None and source == sink:
                issues.append(ParseIssue(line_no, f"source and sink are both {source}"))
        elif word == "node":
            if len(tokens) != 2:
                issues.append(ParseIssue(line_no, "node directive needs exactly one node id"))
                continue
            mention(tokens[1], line_no)
        elif word == "pos":
            if len(tokens) != 4:
                issues.append(ParseIssue(line_no, "pos directive needs a node id and two coordinates"))
                continue
            node = mention(tokens[1], line_no)
            if node is None:
                continue
            try:
                x, y = float(tokens[2]), float(tokens[3])
            except ValueError:
                issues.append(ParseIssue(line_no, f"malformed coordinates {tokens[2]!r} {tokens[3]!r}"))
                continue
            if not (math.isfinite(x) and math.isfinite(y)):
                issues.append(ParseIssue(line_no, "coordinates must be finite"))
                continue
            positions[node] = (x, y)
        elif len(tokens) == 3:
            tail = mention(tokens[0], line_no)
            head = mention(tokens[1], line_no)
            if tail is None or head is None:
                continue
            try:
                capacity = int(tokens[2])
            except ValueError:
                issues.append(ParseIssue(line_no, f"capacity {tokens[2]!r} is not an integer"))
                continue
            if capacity < 0:
                issues.append(ParseIssue(line_no, f"negative capacity {capacity} on {tail} {head}"))
                continue
            if tail == head:
                issues.append(ParseIssue(line_no, f"self-loop at {tail}"))
                continue
            if (tail, head) in edge_keys:
                issues.append(ParseIssue(line_no, f"duplicate edge {tail}→{head} at line {line_no}"))
                continue
            if (head, tail) in edge_keys:
                issues.append(ParseIssue(line_no, f"anti-parallel pair ({head},{tail}) at line {line_no}"))
                continue
            edge_keys.add((tail, head))
            edges.append((tail, head, capacity))
        elif len(tokens) == 2:
            issues.append(ParseIssue(line_no, f"unknown directive {word!r}"))
        else:
            issues.append(ParseIssue(line_no, f"malformed record: {line!r}"))

    if source is None:
        issues.append(ParseIssue(0, "missing source directive"))
    if sink is None:
        issues.append(ParseIssue(0, "missing sink directive"))
    if issues:
        raise EdgelistError(issues)

    net = FlowNetwork.build(edges, source, sink, nodes=nodes, positions=positions)
    leftovers = validate_network(net)
    if leftovers:  # backstop; the per-line checks above should have caught everything
        raise EdgelistError([ParseIssue(0, f.message) for f in leftovers])
    return net


def _format_coord(value: float) -> str:
    return repr(float(value))


def serialize_edgelist(net: FlowNetwork) -> str:
    """Serialize a network in canonical order.

    Drafts without a source or sink are written without that directive, so
    an interactive session can export its work-in-progress; for networks that
    pass `validate_network` the output parses back to an equal network.
    """
    lines: list[str] = []
    if net.source is not None:
        lines.append(f"source {net.source}")
    if net.sink is not None:
        lines.append(f"sink {net.sink}")
    mentioned = {net.source, net.sink}
    for e in net.edges:
        mentioned.add(e.tail)
        mentioned.add(e.head)
    mentioned.update(net.positions)
    for node in sorted(net.nodes - mentioned):
        lines.append(f"node {node}")
    for node in sorted(net.positions):
        x, y = net.positions[node]
        lines.append(f"pos {node} {_format_coord(x)} {_format_coord(y)}")
    for e in sorted(net.edges, key=lambda e: e.key):
        lines.append(f"{e.tail} {e.head} {e.capacity}")
    return "".join(line + "\n" for line in lines)
