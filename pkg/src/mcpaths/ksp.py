"""K shortest simple paths by root-and-spur deviation search.

Paths are ordered by (packed length, node sequence). The node-sequence
tie-break pins a unique top-k whenever several simple paths share one
packed length, which keeps results reproducible and directly checkable
against exhaustive enumeration.

To honour that order exactly, every shortest-path subcall here returns
the lexicographically smallest node sequence among equally short paths.
With strictly positive edge weights a greedy walk down the
distance-to-destination gradient does this outright; zero-weight edges
admit equal-length detours that can strand the walk, so each greedy step
is then verified with a masked re-search before being committed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dijkstra import Path, filter_by_threshold, packed_weights, shortest_distances, trace_path
from .graph import Graph, GraphError
from .lexweight import BitLayout

__all__ = ["KspResult", "yen_ksp"]


@dataclass(frozen=True)
class KspResult:
    """At most k distinct simple paths in non-decreasing packed order.

    ``exhausted`` is set when the graph holds fewer simple s-t paths than
    were requested.
    """

    paths: tuple[Path, ...]
    exhausted: bool


@dataclass(frozen=True)
class _Route:
    cost: int
    nodes: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def order_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.cost, self.nodes)


def _lexmin_shortest(
    g: Graph,
    weights: dict[int, int],
    source: int,
    dest: int,
    banned_nodes: frozenset[int],
    banned_edges: frozenset[int],
) -> _Route | None:
    """Shortest path with the lexicographically smallest node sequence."""
    to_dest, _ = shortest_distances(
        g, weights, dest, banned_nodes=banned_nodes, banned_edges=banned_edges, incoming=True
    )
    remaining = to_dest[source] if source not in banned_nodes else None
    if remaining is None:
        return None
    total = remaining
    has_zero = any(
        weights[e.eid] == 0
        and e.eid not in banned_edges
        and e.u not in banned_nodes
        and e.v not in banned_nodes
        for e in g.edges
    )
    nodes = [source]
    edges: list[int] = []
    visited = {source}
    at = source
    while at != dest:
        chosen = None
        for v, eid in g.out_arcs(at):
            if v in visited or v in banned_nodes or eid in banned_edges:
                continue
            w = weights[eid]
            if to_dest[v] is None or w + to_dest[v] != remaining:
                continue
            if has_zero:
                # A zero-weight detour can make the gradient step a dead
                # end for *simple* paths; re-check against visited nodes.
                masked, _ = shortest_distances(
                    g,
                    weights,
                    v,
                    banned_nodes=banned_nodes | visited,
                    banned_edges=banned_edges,
                )
                if masked[dest] != remaining - w:
                    continue
            chosen = (v, eid, w)
            break
        assert chosen is not None, "gradient walk lost the shortest path"
        v, eid, w = chosen
        nodes.append(v)
        edges.append(eid)
        visited.add(v)
        remaining -= w
        at = v
    return _Route(total, tuple(nodes), tuple(edges))


def yen_ksp(
    g: Graph,
    layout: BitLayout,
    s: int,
    t: int,
    k: int,
    threshold: int | None = None,
) -> KspResult:
    """The k smallest simple s-t paths under (packed length, node sequence).

    Threshold filtering is applied before the search, so every returned
    path survives it. Returns all existing paths with ``exhausted=True``
    when fewer than k exist; ``s == t`` yields the single empty path.
    """
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    for name, node in (("source", s), ("dest", t)):
        if not g.has_node(node):
            raise GraphError(f"{name} {node} out of range [0, {g.node_count})")
    work = filter_by_threshold(g, layout, threshold)
    if s == t:
        trivial = trace_path(work, layout, [], s)
        return KspResult((trivial,), exhausted=k > 1)
    weights = packed_weights(work, layout)

    first = _lexmin_shortest(work, weights, s, t, frozenset(), frozenset())
    if first is None:
        return KspResult((), exhausted=True)
    accepted: list[_Route] = [first]
    candidates: dict[tuple[int, ...], _Route] = {}

    while len(accepted) < k:
        prev = accepted[-1]
        prefix_cost = 0
        for i in range(len(prev.nodes) - 1):
            spur = prev.nodes[i]
            root_nodes = prev.nodes[: i + 1]
            root_edges = prev.edges[:i]
            banned_edges = {
                p.edges[i] for p in accepted if p.nodes[: i + 1] == root_nodes and len(p.edges) > i
            }
            banned_nodes = frozenset(root_nodes[:-1])
            spur_route = _lexmin_shortest(
                work, weights, spur, t, banned_nodes, frozenset(banned_edges)
            )
            if spur_route is not None:
                total = _Route(
                    prefix_cost + spur_route.cost,
                    root_nodes + spur_route.nodes[1:],
                    root_edges + spur_route.edges,
                )
                known = candidates.get(total.nodes)
                if known is None or total.order_key < known.order_key:
                    candidates[total.nodes] = total
            prefix_cost += weights[prev.edges[i]]
        if not candidates:
            break
        best = min(candidates.values(), key=lambda r: r.order_key)
        del candidates[best.nodes]
        accepted.append(best)

    paths = tuple(trace_path(work, layout, r.edges, s) for r in accepted)
    return KspResult(paths, exhausted=len(paths) < k)
