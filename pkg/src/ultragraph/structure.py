"""Recognizers for the graph classes the characterization results quantify
over: forests, trees, complete multipartite graphs, and stars.

Complete-multipartite recognition runs on the complement (is it a
disjoint union of cliques?). The three-vertex obstruction scan in
``find_multipartite_obstruction`` is an independent second route to the
same question and the two are tested against each other exhaustively on
small graphs.
"""

from __future__ import annotations

from collections import deque

from .graph import Partition, Vertex, WeightedGraph, connected_components, is_connected


def is_forest(g: WeightedGraph) -> bool:
    """True iff the graph has no cycles: |E| = |V| - #components."""
    return g.edge_count() == len(g.vertices) - len(connected_components(g))


def is_tree(g: WeightedGraph) -> bool:
    return is_forest(g) and is_connected(g)


def _complement_components(g: WeightedGraph) -> list[list[Vertex]]:
    """Connected components of the complement graph, by first appearance.

    Breadth-first search over non-neighbors; quadratic, which is fine at
    the sizes this toolkit targets.
    """
    order = g.vertices
    seen: set[Vertex] = set()
    comps: list[list[Vertex]] = []
    for start in order:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            nbs = set(g.neighbors(u))
            for v in order:
                if v not in seen and v != u and v not in nbs:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        idx = g.vertex_index
        comp.sort(key=idx)
        comps.append(comp)
    return comps


def multipartite_parts(g: WeightedGraph) -> Partition | None:
    """Parts of a complete multipartite graph, or None.

    A graph is complete multipartite exactly when its complement is a
    disjoint union of cliques; the candidate parts are the complement's
    components, and they qualify iff each is independent in g (cross-part
    adjacency is then automatic, since cross-component pairs have no
    complement edge). k = 1 (edgeless graph) is reported too; callers
    needing k >= 2 must check.
    """
    comps = _complement_components(g)
    for comp in comps:
        for i, u in enumerate(comp):
            for v in comp[i + 1:]:
                if g.has_edge(u, v):
                    return None
    return Partition(tuple(tuple(c) for c in comps))


def find_multipartite_obstruction(
    g: WeightedGraph,
) -> tuple[Vertex, Vertex, Vertex] | None:
    """First edge-plus-detached-vertex triple (u, v, p), or None.

    The pattern: {u,v} is an edge and p is adjacent to neither endpoint.
    A graph contains no such induced triple iff it is complete
    multipartite. Scan order is canonical (edges, then vertices), so the
    witness is deterministic.
    """
    for u, v in g.edges:
        for p in g.vertices:
            if p == u or p == v:
                continue
            if not g.has_edge(u, p) and not g.has_edge(v, p):
                return (u, v, p)
    return None


def is_star(g: WeightedGraph) -> bool:
    """True iff g is complete bipartite with a singleton part.

    The singleton's vertex is then the hub, adjacent to every other
    vertex; such graphs are exactly the trees of diameter at most two
    with at least one edge.
    """
    parts = multipartite_parts(g)
    if parts is None or len(parts) != 2:
        return False
    return any(len(block) == 1 for block in parts.blocks)
