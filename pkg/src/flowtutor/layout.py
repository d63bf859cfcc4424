"""Automatic node placement: force-directed spring layout and BFS layered layout.

Both layouts are total and deterministic (the spring model given its seed) and
always place every node at finite, pairwise-distinct coordinates inside the
requested bounding box.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import FlowError, FlowNetwork, reachable_from


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, tuple[float, float]]
    width: float
    height: float


def _check_box(width: float, height: float) -> None:
    if not (width > 0 and height > 0):
        raise FlowError(f"layout box must have positive area, got {width} x {height}")


_DEDUPE_LIMIT = 1000


def _dedupe(coords: np.ndarray, width: float, height: float) -> np.ndarray:
    # Nudge exact collisions (possible after clamping) along a deterministic
    # golden-angle spiral until all coordinates are distinct.
    step = min(width, height) * 1e-3
    for i in range(1, len(coords)):
        k = 0
        while any(np.array_equal(coords[i], coords[j]) for j in range(i)):
            k += 1
            angle = 2.399963229728653 * (i + k)
            offset = step * k * np.array([np.cos(angle), np.sin(angle)])
            coords[i] = np.clip(coords[i] + offset, [0.0, 0.0], [width, height])
            if k > _DEDUPE_LIMIT:
                raise FlowError("could not separate overlapping nodes")
    return coords


def spring_layout(
    net: FlowNetwork,
    width: float = 800.0,
    height: float = 600.0,
    seed: int = 0,
    iterations: int = 300,
    initial_temperature: float | None = None,
) -> LayoutResult:
    """Fruchterman-Reingold style force-directed placement.

    Repulsion k^2/d between all pairs and attraction d^2/k along edges, with
    k = sqrt(width*height/|V|), under a linearly cooling displacement cap.
    The seeded initial placement makes the result reproducible.
    """
    _check_box(width, height)
    names = sorted(net.nodes)
    n = len(names)
    if n == 0:
        raise FlowError("cannot lay out an empty network")
    if n == 1:
        return LayoutResult({names[0]: (width / 2.0, height / 2.0)}, width, height)

    index = {name: i for i, name in enumerate(names)}
    rng = np.random.default_rng(seed)
    coords = rng.uniform([0.25 * width, 0.25 * height], [0.75 * width, 0.75 * height], size=(n, 2))

    k = float(np.sqrt(width * height / n))
    temperature = initial_temperature if initial_temperature is not None else width / 10.0
    cooling = temperature / (iterations + 1)

    pairs = np.array(sorted({(index[e.tail], index[e.head]) for e in net.edges}), dtype=int)
    has_edges = pairs.size > 0

    for _ in range(iterations):
        delta = coords[:, None, :] - coords[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        # repulsion k^2 / d, directed away from every other node
        disp = (delta / dist[..., None] * (k * k / dist)[..., None]).sum(axis=1)
        if has_edges:
            evec = coords[pairs[:, 0]] - coords[pairs[:, 1]]
            edist = np.maximum(np.linalg.norm(evec, axis=1), 1e-9)
            pull = evec / edist[:, None] * (edist * edist / k)[:, None]
            np.subtract.at(disp, pairs[:, 0], pull)
            np.add.at(disp, pairs[:, 1], pull)
        length = np.maximum(np.linalg.norm(disp, axis=1), 1e-9)
        capped = np.minimum(length, temperature)
        coords = coords + disp / length[:, None] * capped[:, None]
        coords = np.clip(coords, [0.0, 0.0], [width, height])
        temperature = max(temperature - cooling, 1e-3)

    coords = _dedupe(coords, width, height)
    placed = {name: (float(coords[i][0]), float(coords[i][1])) for name, i in index.items()}
    return LayoutResult(placed, width, height)


def layered_layout(net: FlowNetwork, width: float = 800.0, height: float = 600.0) -> LayoutResult:
    """Columns by BFS distance from the source; unreachable nodes trail in a final column.

    Within a column, nodes are sorted by id and spaced evenly top to bottom.
    """
    _check_box(width, height)
    if net.source is None or net.sink is None:
        raise FlowError("layered layout needs a source and a sink")
    if net.sink not in reachable_from(net, net.source):
        raise FlowError("layered layout needs the sink reachable from the source")

    adjacency: dict[str, list[str]] = {}
    for e in net.edges:
        adjacency.setdefault(e.tail, []).append(e.head)
    layer = {net.source: 0}
    frontier = [net.source]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for v in adjacency.get(u, ()):
                if v not in layer:
                    layer[v] = depth
                    nxt.append(v)
        frontier = nxt
    trailing = max(layer.values()) + 1
    for node in net.nodes:
        layer.setdefault(node, trailing)

    columns: dict[int, list[str]] = {}
    for node, col in layer.items():
        columns.setdefault(col, []).append(node)
    used = sorted(columns)
    placed: dict[str, tuple[float, float]] = {}
    for x_rank, col in enumerate(used):
        members = sorted(columns[col])
        x = width * (x_rank + 0.5) / len(used)
        for y_rank, node in enumerate(members):
            placed[node] = (x, height * (y_rank + 0.5) / len(members))
    return LayoutResult(placed, width, height)
