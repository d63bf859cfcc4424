"""Augmenting-path search strategies and the autonomous solver loop.

Three ways to pick an augmenting path in a residual graph: seeded random
depth-first search, fewest-edges breadth-first search, and maximum-bottleneck
search (a Dijkstra variant). ``solve`` repeats find-path / augment-by-full-
bottleneck until no augmenting path remains.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Union

from .network import (
    Flow,
    FlowNetwork,
    Path,
    ResidualGraph,
    bottleneck,
    augment,
    flow_value,
    require_valid,
    residual_graph,
)


@dataclass(frozen=True)
class Random:
    """Pick uniformly among untried continuations at every step of a DFS."""

    seed: int = 0


@dataclass(frozen=True)
class Shortest:
    """Always augment along a fewest-edges path (Edmonds-Karp)."""


@dataclass(frozen=True)
class Widest:
    """Always augment along a maximum-bottleneck path."""


Strategy = Union[Random, Shortest, Widest]

STRATEGY_NAMES = ("random", "shortest", "widest")


def parse_strategy(name: str, seed: int = 0) -> Strategy:
    """Map a wire-format strategy name to a Strategy value."""
    if name == "random":
        return Random(seed)
    if name == "shortest":
        return Shortest()
    if name == "widest":
        return Widest()
    raise ValueError(f"unknown strategy {name!r}; expected one of {', '.join(STRATEGY_NAMES)}")


def _mix_seed(seed: int, step: int) -> int:
    # SplitMix-style derivation so per-step generators never alias.
    return (seed * 6364136223846793005 + step * 1442695040888963407 + 0x9E3779B97F4A7C15) % (1 << 64)


def find_random_path(residual: ResidualGraph, seed: int | random.Random) -> Path | None:
    """Randomized DFS from the source; None iff the sink is unreachable.

    At each node, one arc leading to a not-yet-visited node is chosen
    uniformly at random. Dead ends backtrack; visited nodes are never
    re-entered. The seed fully determines the result.
    """
    rng = random.Random(seed) if isinstance(seed, int) else seed
    visited = {residual.source}

    def walk(node: str) -> list | None:
        if node == residual.sink:
            return []
        options = [a for a in residual.arcs_from(node) if a.head not in visited]
        while options:
            arc = options.pop(rng.randrange(len(options)))
            visited.add(arc.head)
            tail = walk(arc.head)
            if tail is not None:
                return [arc] + tail
        return None

    found = walk(residual.source)
    return None if found is None else tuple(found)


def find_shortest_path(residual: ResidualGraph) -> Path | None:
    """BFS for a fewest-edges augmenting path; ties break toward ascending node ids."""
    if residual.source == residual.sink:
        return ()
    parent: dict[str, object] = {residual.source: None}
    frontier = [residual.source]
    while frontier and residual.sink not in parent:
        next_frontier: list[str] = []
        for node in frontier:
            for arc in residual.arcs_from(node):  # arcs_from is sorted by head id
                if arc.head not in parent:
                    parent[arc.head] = arc
                    next_frontier.append(arc.head)
        frontier = next_frontier
    if residual.sink not in parent:
        return None
    arcs: list = []
    node = residual.sink
    while node != residual.source:
        arc = parent[node]
        arcs.append(arc)
        node = arc.tail  # type: ignore[union-attr]
    return tuple(reversed(arcs))


def find_widest_path(residual: ResidualGraph) -> Path | None:
    """Maximum-bottleneck path via a Dijkstra variant.

    Among maximum-bottleneck paths the search prefers fewer edges, then
    ascending predecessor node ids, so the result is canonical.
    """
    INF = float("inf")
    # best[v] = (width, hops, predecessor arc); lexicographically optimal.
    best: dict[str, tuple[float, int, object]] = {residual.source: (INF, 0, None)}
    heap: list[tuple[float, int, str]] = [(-INF, 0, residual.source)]
    settled: set[str] = set()
    while heap:
        neg_width, hops, node = heapq.heappop(heap)
        if node in settled:
            continue
        if (-neg_width, hops) != best[node][:2]:
            continue  # stale entry
        settled.add(node)
        if node == residual.sink:
            break
        width = -neg_width
        for arc in residual.arcs_from(node):
            cand = (min(width, arc.capacity), hops + 1)
            if arc.head in settled:
                continue
            known = best.get(arc.head)
            if known is None or cand[0] > known[0] or (cand[0] == known[0] and cand[1] < known[1]):
                best[arc.head] = (cand[0], cand[1], arc)
                heapq.heappush(heap, (-cand[0], cand[1], arc.head))
            elif (
                cand[0] == known[0]
                and cand[1] == known[1]
                and known[2] is not None
                and arc.tail < known[2].tail  # type: ignore[union-attr]
            ):
                best[arc.head] = (cand[0], cand[1], arc)
    if residual.sink not in best:
        return None
    arcs: list = []
    node = residual.sink
    while node != residual.source:
        arc = best[node][2]
        arcs.append(arc)
        node = arc.tail  # type: ignore[union-attr]
    return tuple(reversed(arcs))


def find_path(residual: ResidualGraph, strategy: Strategy, rng: random.Random | None = None) -> Path | None:
    """Dispatch to the strategy's finder. ``rng`` overrides Random's own seed."""
    if isinstance(strategy, Random):
        return find_random_path(residual, rng if rng is not None else strategy.seed)
    if isinstance(strategy, Shortest):
        return find_shortest_path(residual)
    if isinstance(strategy, Widest):
        return find_widest_path(residual)
    raise TypeError(f"not a strategy: {strategy!r}")


@dataclass(frozen=True)
class SolveResult:
    flow: Flow
    value: int
    iterations: int
    history: tuple[tuple[Path, int], ...]


def solve(net: FlowNetwork, strategy: Strategy) -> SolveResult:
    """Run the augmenting-path loop to completion and return the maximum flow.

    Every iteration augments by the full bottleneck of the chosen path, so
    with integer capacities the loop always terminates. The resulting value
    is the maximum flow value regardless of strategy.
    """
    require_valid(net)
    flow = Flow.zero()
    history: list[tuple[Path, int]] = []
    rng = random.Random(_mix_seed(strategy.seed, 0)) if isinstance(strategy, Random) else None
    while True:
        residual = residual_graph(net, flow)
        path = find_path(residual, strategy, rng)
        if path is None:
            break
        amount = bottleneck(path).value
        flow = augment(net, flow, path, amount)
        history.append((path, amount))
    return SolveResult(
        flow=flow,
        value=flow_value(net, flow),
        iterations=len(history),
        history=tuple(history),
    )
