"""Shared test networks and the deterministic random-network corpus."""

from __future__ import annotations

import random

from flowtutor import FlowNetwork

# Bipartite matching instance used throughout: left nodes A-D, right nodes
# E-H, with an adjacency that admits exactly one perfect matching pattern.
BIPARTITE_PAIRS = [
    ("A", "E"),
    ("A", "F"),
    ("A", "G"),
    ("A", "H"),
    ("B", "E"),
    ("B", "F"),
    ("B", "G"),
    ("C", "E"),
    ("C", "F"),
    ("D", "E"),
]


def diamond() -> FlowNetwork:
    return FlowNetwork.build(
        [("s", "a", 3), ("s", "b", 2), ("a", "b", 1), ("a", "t", 2), ("b", "t", 3)], "s", "t"
    )


def zigzag(big: int = 1000) -> FlowNetwork:
    return FlowNetwork.build(
        [("s", "a", big), ("s", "b", big), ("a", "b", 1), ("a", "t", big), ("b", "t", big)], "s", "t"
    )


def matching_network(pairs=BIPARTITE_PAIRS) -> FlowNetwork:
    """Standard matching-to-flow reduction: unit capacities, super source and sink."""
    left = sorted({u for u, _ in pairs})
    right = sorted({v for _, v in pairs})
    edges = [("s", u, 1) for u in left]
    edges += [(u, v, 1) for u, v in pairs]
    edges += [(v, "t", 1) for v in right]
    return FlowNetwork.build(edges, "s", "t")


def single_edge(capacity: int = 5) -> FlowNetwork:
    return FlowNetwork.build([("s", "t", capacity)], "s", "t")


def chain(capacities=(3, 1, 7)) -> FlowNetwork:
    names = ["s"] + [f"m{i}" for i in range(1, len(capacities))] + ["t"]
    edges = [(names[i], names[i + 1], c) for i, c in enumerate(capacities)]
    return FlowNetwork.build(edges, "s", "t")


def random_network(seed: int, n_nodes: int, max_capacity: int = 10, edge_prob: float = 0.55) -> FlowNetwork:
    """Deterministic random network: no self-loops, no anti-parallel pairs.

    Orientation is biased from v0 toward v_{n-1} so that most instances carry
    nontrivial flow; the rest keep unreachable sinks and zero-capacity edges
    in the mix.
    """
    rng = random.Random((seed + 1) * 7919 + n_nodes)
    names = [f"v{i}" for i in range(n_nodes)]
    edges = []
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            if rng.random() < edge_prob:
                tail, head = (names[i], names[j]) if rng.random() < 0.8 else (names[j], names[i])
                edges.append((tail, head, rng.randint(0, max_capacity)))
    return FlowNetwork.build(edges, names[0], names[-1], nodes=names)


def corpus(sizes=range(3, 9), seeds_per_size: int = 34, max_capacity: int = 10) -> list[FlowNetwork]:
    """The fixed evaluation corpus: >= 200 networks, >= 20 seeds per size, |V| <= 8."""
    return [random_network(seed, n, max_capacity) for n in sizes for seed in range(seeds_per_size)]
