"""Single-source search over packed weights, plus threshold edge filtering.

The search is plain Dijkstra; the only twist is that distances are the
arbitrary-precision packed integers from :mod:`mcpaths.lexweight`, so one
run minimizes every criterion simultaneously in priority order. Queue
ties are popped lowest node id first, which makes distance maps and the
paths reconstructed from them reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Collection, Mapping, Sequence

from .graph import Graph, GraphError, NoPathError
from .lexweight import BitLayout, pack

__all__ = [
    "Path",
    "DistanceMap",
    "packed_weights",
    "shortest_distances",
    "filter_by_threshold",
    "dijkstra",
    "extract_path",
    "trace_path",
]


@dataclass(frozen=True)
class Path:
    """A simple path with cached packed and per-criterion lengths."""

    nodes: tuple[int, ...]
    edges: tuple[int, ...]
    ew_length: int
    criteria_length: tuple[int, ...]

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def dest(self) -> int:
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.edges)


def trace_path(g: Graph, layout: BitLayout, edge_ids: Sequence[int], start: int) -> Path:
    """Build a Path from consecutive edge ids beginning at ``start``.

    Orientation of undirected edges is inferred by chaining endpoints;
    per-criterion sums are accumulated directly from the edge vectors.
    """
    nodes = [start]
    sums = [0] * g.q
    at = start
    for eid in edge_ids:
        e = g.edge(eid)
        if at == e.u:
            at = e.v
        elif at == e.v and not g.directed:
            at = e.u
        else:
            raise GraphError(f"edge {eid} does not continue the path at node {at}")
        nodes.append(at)
        for i, w in enumerate(e.weights):
            sums[i] += w
    if len(set(nodes)) != len(nodes):
        raise GraphError("path repeats a node")
    criteria = tuple(sums)
    return Path(tuple(nodes), tuple(edge_ids), pack(layout, criteria), criteria)


def packed_weights(g: Graph, layout: BitLayout) -> dict[int, int]:
    """Packed integer weight per edge id."""
    return {e.eid: pack(layout, e.weights) for e in g.edges}


def shortest_distances(
    g: Graph,
    weight_by_eid: Mapping[int, int],
    source: int,
    *,
    banned_nodes: Collection[int] = (),
    banned_edges: Collection[int] = (),
    incoming: bool = False,
) -> tuple[list[int | None], list[tuple[int, int] | None]]:
    """Dijkstra core shared by every module.

    Returns (dist, pred) where ``pred[v]`` is ``(edge_id, previous_node)``
    on one shortest path to ``v``, or None. ``banned_nodes`` and
    ``banned_edges`` mask parts of the graph without copying it; with
    ``incoming=True`` the search walks arcs backwards (distance to a
    destination instead of from a source).
    """
    n = g.node_count
    dist: list[int | None] = [None] * n
    pred: list[tuple[int, int] | None] = [None] * n
    if source in banned_nodes:
        return dist, pred
    best: list[int | None] = [None] * n
    best[source] = 0
    heap: list[tuple[int, int]] = [(0, source)]
    arcs = g.in_arcs if incoming else g.out_arcs
    while heap:
        d, u = heapq.heappop(heap)
        if dist[u] is not None:
            continue
        dist[u] = d
        for v, eid in arcs(u):
            if dist[v] is not None or v in banned_nodes or eid in banned_edges:
                continue
            nd = d + weight_by_eid[eid]
            if best[v] is None or nd < best[v]:
                best[v] = nd
                pred[v] = (eid, u)
                heapq.heappush(heap, (nd, v))
    return dist, pred


def filter_by_threshold(g: Graph, layout: BitLayout, threshold: int | None) -> Graph:
    """Drop every edge whose packed weight is at or above the threshold.

    ``None`` disables filtering. Edge ids of the survivors are preserved.
    May disconnect the graph; callers detect that downstream.
    """
    if threshold is None:
        return g
    kept = [e for e in g.edges if pack(layout, e.weights) < threshold]
    return Graph(g.directed, g.node_count, g.q, kept)


@dataclass
class DistanceMap:
    """Distances and predecessor links from one source."""

    graph: Graph
    layout: BitLayout
    source: int
    dist: list[int | None]
    pred: list[tuple[int, int] | None]

    def reached(self, v: int) -> bool:
        return self.dist[v] is not None


def dijkstra(g: Graph, layout: BitLayout, source: int) -> DistanceMap:
    """Shortest packed distance from ``source`` to every node."""
    if not g.has_node(source):
        raise GraphError(f"source {source} out of range [0, {g.node_count})")
    weights = packed_weights(g, layout)
    dist, pred = shortest_distances(g, weights, source)
    return DistanceMap(g, layout, source, dist, pred)


def extract_path(dm: DistanceMap, t: int) -> Path:
    """Reconstruct one shortest path from the map's source to ``t``."""
    if not dm.graph.has_node(t):
        raise GraphError(f"dest {t} out of range [0, {dm.graph.node_count})")
    if dm.dist[t] is None:
        raise NoPathError(f"no path from {dm.source} to {t}")
    edge_ids: list[int] = []
    at = t
    while at != dm.source:
        eid, prev = dm.pred[at]
        edge_ids.append(eid)
        at = prev
    edge_ids.reverse()
    path = trace_path(dm.graph, dm.layout, edge_ids, dm.source)
    assert path.ew_length == dm.dist[t]
    return path
