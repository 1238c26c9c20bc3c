"""Core graph container shared by all routing algorithms.

Nodes are dense integer ids in [0, node_count). Every edge carries a
vector of q non-negative integer weights, one per criterion, ordered by
descending priority (position 0 is the most important criterion).

Undirected edges are stored once and exposed as two directed arcs that
share a single edge id, so disjointness checks treat both directions as
the same physical link. Graphs are immutable after construction and safe
to share across concurrent queries.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "NoPathError",
    "PruneResult",
    "build_graph",
    "reverse",
    "reachability_prune",
]


class GraphError(ValueError):
    """Rejected input: malformed graph, edge, or query parameter."""


class NoPathError(Exception):
    """No path exists between the queried endpoints."""


@dataclass(frozen=True)
class Edge:
    """One weighted link; (u, v) is the stored orientation."""

    u: int
    v: int
    weights: tuple[int, ...]
    eid: int

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


class Graph:
    """Adjacency-list graph over integer node ids.

    Adjacency is exposed as ``out_arcs``/``in_arcs`` lists of
    ``(neighbor, edge_id)`` pairs sorted by neighbor id, which keeps every
    traversal in this package deterministic regardless of edge insertion
    order. For undirected graphs the two views are identical.
    """

    __slots__ = ("directed", "node_count", "q", "edges", "_adj", "_radj", "_by_id")

    def __init__(self, directed: bool, node_count: int, q: int, edges: Sequence[Edge]):
        if node_count < 0:
            raise GraphError(f"node_count must be >= 0, got {node_count}")
        if q < 1:
            raise GraphError(f"criterion count must be >= 1, got {q}")
        self.directed = bool(directed)
        self.node_count = node_count
        self.q = q
        self.edges: tuple[Edge, ...] = tuple(edges)

        self._by_id: dict[int, Edge] = {}
        seen_pairs: set[tuple[int, int]] = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(node_count)]
        radj: list[list[tuple[int, int]]] = [[] for _ in range(node_count)] if directed else adj

        for e in self.edges:
            label = f"edge {e.eid} ({e.u}, {e.v})"
            if not (0 <= e.u < node_count and 0 <= e.v < node_count):
                raise GraphError(f"{label}: endpoint out of range [0, {node_count})")
            if e.u == e.v:
                raise GraphError(f"{label}: self-loops are not allowed")
            if len(e.weights) != q:
                raise GraphError(f"{label}: expected {q} weights, got {len(e.weights)}")
            if any(w < 0 for w in e.weights):
                raise GraphError(f"{label}: negative weight")
            key = (e.u, e.v) if directed else (min(e.u, e.v), max(e.u, e.v))
            if key in seen_pairs:
                raise GraphError(f"{label}: parallel edge")
            seen_pairs.add(key)
            if e.eid in self._by_id:
                raise GraphError(f"{label}: duplicate edge id")
            self._by_id[e.eid] = e
            adj[e.u].append((e.v, e.eid))
            if directed:
                radj[e.v].append((e.u, e.eid))
            else:
                adj[e.v].append((e.u, e.eid))

        self._adj = tuple(tuple(sorted(arcs)) for arcs in adj)
        self._radj = self._adj if not directed else tuple(tuple(sorted(arcs)) for arcs in radj)

    def out_arcs(self, u: int) -> tuple[tuple[int, int], ...]:
        """Arcs leaving ``u`` as (neighbor, edge_id), sorted by neighbor."""
        return self._adj[u]

    def in_arcs(self, u: int) -> tuple[tuple[int, int], ...]:
        """Arcs entering ``u``; identical to ``out_arcs`` when undirected."""
        return self._radj[u]

    def edge(self, eid: int) -> Edge:
        return self._by_id[eid]

    def has_node(self, u: int) -> bool:
        return 0 <= u < self.node_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def next_edge_id(self) -> int:
        """Smallest id strictly above every existing edge id."""
        return max(self._by_id, default=-1) + 1

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, nodes={self.node_count}, edges={self.edge_count}, q={self.q})"


def build_graph(
    directed: bool,
    node_count: int,
    q: int,
    edge_list: Iterable[tuple[int, int, Sequence[int]]],
) -> Graph:
    """Validate and assemble a graph from (u, v, weights) triples.

    Edge ids are assigned in input order starting at 0. Rejects
    self-loops, parallel edges, wrong-length weight vectors, and negative
    weights, naming the offending edge in the diagnostic.
    """
    edges = [
        Edge(u, v, tuple(int(w) for w in weights), eid)
        for eid, (u, v, weights) in enumerate(edge_list)
    ]
    return Graph(directed, node_count, q, edges)


def reverse(g: Graph) -> Graph:
    """Flip every arc of a directed graph, keeping weights and edge ids."""
    if not g.directed:
        raise GraphError("reverse() requires a directed graph")
    flipped = [Edge(e.v, e.u, e.weights, e.eid) for e in g.edges]
    return Graph(True, g.node_count, g.q, flipped)


@dataclass(frozen=True)
class PruneResult:
    """Subgraph of nodes reachable from the source and co-reachable to the
    destination, with node ids remapped densely.

    ``to_original[new_id]`` recovers the input node id; edge ids are kept
    unchanged so results can be reported against the input graph.
    """

    graph: Graph
    to_original: tuple[int, ...]
    source: int
    dest: int


def _bfs(g: Graph, start: int, incoming: bool) -> set[int]:
    seen = {start}
    queue = deque([start])
    arcs = g.in_arcs if incoming else g.out_arcs
    while queue:
        u = queue.popleft()
        for v, _ in arcs(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def reachability_prune(g: Graph, s: int, t: int) -> PruneResult:
    """Drop every node that no s-t path can visit.

    Raises NoPathError when ``t`` is unreachable from ``s``.
    """
    for name, node in (("source", s), ("dest", t)):
        if not g.has_node(node):
            raise GraphError(f"{name} {node} out of range [0, {g.node_count})")
    forward = _bfs(g, s, incoming=False)
    if t not in forward:
        raise NoPathError(f"no path from {s} to {t}")
    backward = _bfs(g, t, incoming=True)
    kept = sorted(forward & backward)
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        Edge(remap[e.u], remap[e.v], e.weights, e.eid)
        for e in g.edges
        if e.u in remap and e.v in remap
    ]
    pruned = Graph(g.directed, len(kept), g.q, edges)
    return PruneResult(pruned, tuple(kept), remap[s], remap[t])
