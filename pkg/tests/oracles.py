"""Brute-force oracles, independent of the code paths they check.

Everything here works by exhaustive enumeration or direct summation from the
definitions, so expected values in tests are computed rather than invented.
"""

from __future__ import annotations

from itertools import chain, combinations

from flowtutor import Flow, FlowNetwork, ResidualGraph, augment


def node_inflow(net: FlowNetwork, flow: Flow, node: str) -> int:
    return sum(flow.on(e.key) for e in net.edges if e.head == node)


def node_outflow(net: FlowNetwork, flow: Flow, node: str) -> int:
    return sum(flow.on(e.key) for e in net.edges if e.tail == node)


def all_cuts(net: FlowNetwork) -> list[tuple[frozenset[str], int]]:
    """Every s-t cut as (s-side, capacity), by enumerating all 2^(|V|-2) subsets."""
    interior = sorted(net.nodes - {net.source, net.sink})
    cuts = []
    for r in range(len(interior) + 1):
        for chosen in combinations(interior, r):
            side = frozenset(chosen) | {net.source}
            capacity = sum(e.capacity for e in net.edges if e.tail in side and e.head not in side)
            cuts.append((side, capacity))
    return cuts


def min_cut_value(net: FlowNetwork) -> int:
    return min(capacity for _, capacity in all_cuts(net))


def min_cut_family(net: FlowNetwork) -> list[frozenset[str]]:
    best = min_cut_value(net)
    return [side for side, capacity in all_cuts(net) if capacity == best]


def all_augmenting_paths(residual: ResidualGraph) -> list[tuple]:
    """Every simple source-to-sink path in the residual graph, by DFS enumeration."""
    paths: list[tuple] = []

    def extend(node: str, visited: set[str], prefix: list) -> None:
        if node == residual.sink:
            paths.append(tuple(prefix))
            return
        for arc in residual.arcs_from(node):
            if arc.head not in visited:
                visited.add(arc.head)
                prefix.append(arc)
                extend(arc.head, visited, prefix)
                prefix.pop()
                visited.remove(arc.head)

    extend(residual.source, {residual.source}, [])
    return paths


def max_bottleneck(residual: ResidualGraph) -> int | None:
    paths = all_augmenting_paths(residual)
    if not paths:
        return None
    return max(min(arc.capacity for arc in path) for path in paths)


def bfs_distance(residual: ResidualGraph) -> int | None:
    """Fewest-arcs distance from source to sink, or None when unreachable."""
    seen = {residual.source}
    frontier = [residual.source]
    dist = 0
    while frontier:
        if residual.sink in seen:
            return dist
        nxt = []
        for node in frontier:
            for arc in residual.arcs_from(node):
                if arc.head not in seen:
                    seen.add(arc.head)
                    nxt.append(arc.head)
        frontier = nxt
        dist += 1
    return dist if residual.sink in seen else None


def replay_history(net: FlowNetwork, history) -> Flow:
    flow = Flow.zero()
    for entry in history:
        path, amount = (entry.path, entry.amount) if hasattr(entry, "path") else entry
        flow = augment(net, flow, path, amount)
    return flow


def powerset_proper_nonempty(nodes: frozenset[str]) -> list[frozenset[str]]:
    """Every nonempty proper subset of ``nodes``."""
    items = sorted(nodes)
    subsets = chain.from_iterable(combinations(items, r) for r in range(1, len(items)))
    return [frozenset(s) for s in subsets]
