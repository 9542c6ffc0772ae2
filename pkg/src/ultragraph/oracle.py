"""Brute-force reference implementations used to cross-check fast code.

Everything here works by exhaustive enumeration straight from the
definitions, so it is exponential and deliberately capped at small
inputs. The fast algorithms elsewhere in the package are acceptance
tested against these oracles on thousands of random small graphs; the
two sides are developed independently and must never share shortcuts.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadSequenceError, EnumerationLimitError, NoPathError
from .graph import (
    Cycle,
    Path,
    Vertex,
    Weight,
    WeightedGraph,
    build_graph,
    to_weight,
)

MAX_VERTICES = 12
MAX_OBJECTS = 10**6


def _check_size(g: WeightedGraph) -> None:
    if len(g.vertices) > MAX_VERTICES:
        raise EnumerationLimitError(
            f"refusing to enumerate on {len(g.vertices)} vertices "
            f"(cap {MAX_VERTICES})"
        )


def enumerate_simple_paths(g: WeightedGraph, u: Vertex, v: Vertex) -> list[Path]:
    """All repetition-free u-v paths, lexicographic by vertex order.

    Empty when u and v lie in different components.
    """
    _check_size(g)
    if u == v:
        raise ValueError("endpoints must differ")
    g.vertex_index(u)
    g.vertex_index(v)

    found: list[Path] = []
    on_path = {u}
    prefix = [u]

    def extend(current: Vertex) -> None:
        # Neighbors come back in canonical order, so emission order is
        # lexicographic by vertex index without a final sort.
        for nb in g.neighbors(current):
            if nb == v:
                found.append(Path(tuple(prefix) + (v,)))
                if len(found) > MAX_OBJECTS:
                    raise EnumerationLimitError(
                        f"more than {MAX_OBJECTS} paths between {u!r} and {v!r}"
                    )
            elif nb not in on_path:
                on_path.add(nb)
                prefix.append(nb)
                extend(nb)
                prefix.pop()
                on_path.remove(nb)

    extend(u)
    return found


def enumerate_simple_cycles(g: WeightedGraph) -> list[Cycle]:
    """Every simple cycle exactly once, up to rotation and reflection.

    Canonical form: the cycle's smallest vertex first, then its smaller
    neighbor. Output is sorted by the index sequence.
    """
    _check_size(g)
    idx = g.vertex_index
    found: list[Cycle] = []

    for start in g.vertices:
        # Cycles whose minimum vertex is `start`: walk only through
        # strictly larger vertices, close back to `start`, and keep one
        # of the two directions by requiring second < last.
        on_path = {start}
        prefix = [start]

        def extend(current: Vertex) -> None:
            for nb in g.neighbors(current):
                if nb == start:
                    if len(prefix) >= 3 and idx(prefix[1]) < idx(prefix[-1]):
                        found.append(Cycle(tuple(prefix)))
                        if len(found) > MAX_OBJECTS:
                            raise EnumerationLimitError(
                                f"more than {MAX_OBJECTS} cycles"
                            )
                elif idx(nb) > idx(start) and nb not in on_path:
                    on_path.add(nb)
                    prefix.append(nb)
                    extend(nb)
                    prefix.pop()
                    on_path.remove(nb)

        extend(start)

    found.sort(key=lambda c: tuple(idx(v) for v in c.vertices))
    return found


def oracle_subdominant(g: WeightedGraph, u: Vertex, v: Vertex) -> Weight:
    """Least path bottleneck between u and v, straight from the definition.

    Minimum over all simple u-v paths of the path's maximal edge weight.
    Raises NoPathError when no path exists.
    """
    if u == v:
        g.vertex_index(u)
        return Fraction(0)
    paths = enumerate_simple_paths(g, u, v)
    if not paths:
        raise NoPathError(f"no path between {u!r} and {v!r}")
    return min(p.max_weight(g) for p in paths)


def oracle_cycle_condition(g: WeightedGraph) -> bool:
    """True iff every simple cycle has at least two maximal-weight edges."""
    for cycle in enumerate_simple_cycles(g):
        if len(cycle.max_weight_edges(g)) < 2:
            return False
    return True


def oracle_twice_max(g: WeightedGraph) -> frozenset[tuple[Vertex, Vertex]]:
    """Nonadjacent pairs all of whose connecting paths have >= 2 maximal edges.

    Pairs are canonical (earlier vertex first). Pairs in different
    components qualify vacuously, but callers normally pass connected
    graphs; the fast implementation requires connectivity.
    """
    _check_size(g)
    result: set[tuple[Vertex, Vertex]] = set()
    n = len(g.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            u, v = g.vertices[i], g.vertices[j]
            if g.has_edge(u, v):
                continue
            paths = enumerate_simple_paths(g, u, v)
            if all(len(_max_edges(g, p)) >= 2 for p in paths):
                result.add((u, v))
    return frozenset(result)


def _max_edges(g: WeightedGraph, p: Path) -> list[tuple[Vertex, Vertex]]:
    weighted = [(g.weight(a, b), (a, b)) for a, b in p.edges()]
    top = max(w for w, _ in weighted)
    return [e for w, e in weighted if w == top]


def parallel_chains(n: int, eps) -> WeightedGraph:
    """Two terminals joined by n disjoint three-edge chains of graded weight.

    Chain k runs u - s_k - t_k - v with all three edges weighted eps[k-1];
    eps must be strictly positive and strictly decreasing. Every simple
    cycle in the result walks out one chain and back another, so it has
    six edges of only two distinct weights with the larger one appearing
    three times; the weight is therefore always extendable, and the
    subdominant distance between the terminals is the last (smallest)
    level. The family shows that distances can be driven arbitrarily
    close to zero while every edge weight stays strictly positive.
    """
    levels = [to_weight(e) for e in eps]
    if n < 1:
        raise BadSequenceError("need at least one chain")
    if len(levels) != n:
        raise BadSequenceError(f"expected {n} levels, got {len(levels)}")
    if any(e <= 0 for e in levels):
        raise BadSequenceError("levels must be strictly positive")
    if any(a <= b for a, b in zip(levels, levels[1:])):
        raise BadSequenceError("levels must be strictly decreasing")

    vertices = ["u", "v"]
    vertices += [f"s{k}" for k in range(1, n + 1)]
    vertices += [f"t{k}" for k in range(1, n + 1)]
    edges = []
    for k in range(1, n + 1):
        e = levels[k - 1]
        edges.append(("u", f"s{k}", e))
        edges.append((f"s{k}", f"t{k}", e))
        edges.append((f"t{k}", "v", e))
    return build_graph(vertices, edges)
