"""Distance matrices: construction, axiom checking, and derived forms.

Two matrix builders live here. ``subdominant_matrix`` computes the
greatest pseudoultrametric lying edgewise below a weighting, which on a
finite connected graph equals the minimax (bottleneck) path distance;
``shortest_path_matrix`` computes the greatest pseudometric below the
weighting, the usual min-sum path distance. Both are exact.

Every matrix records the strongest axiom class its entries actually
satisfy; the class is verified at construction, never assumed. The
strong-triangle check runs on an order-isomorphic integer recoding of
the entries so the heavy loop is vectorized while the verdict stays
exact (recoding preserves all comparisons).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    NotPseudometricError,
    NotPseudoultrametricError,
    NotUltrametricError,
    VertexMismatchError,
)
from .graph import (
    Partition,
    Vertex,
    Weight,
    WeightedGraph,
    build_graph,
    connected_components,
    to_weight,
)


class AxiomClass(Enum):
    """Strongest axiom package a matrix satisfies.

    ``metric`` and ``pseudoultrametric`` are incomparable strengthenings
    of ``pseudometric``; their conjunction is ``ultrametric``.
    """

    NONE = "none"
    PSEUDOMETRIC = "pseudometric"
    METRIC = "metric"
    PSEUDOULTRAMETRIC = "pseudoultrametric"
    ULTRAMETRIC = "ultrametric"

    def satisfies(self, target: "AxiomClass") -> bool:
        return target in _IMPLIED[self]


_IMPLIED = {
    AxiomClass.NONE: {AxiomClass.NONE},
    AxiomClass.PSEUDOMETRIC: {AxiomClass.NONE, AxiomClass.PSEUDOMETRIC},
    AxiomClass.METRIC: {
        AxiomClass.NONE,
        AxiomClass.PSEUDOMETRIC,
        AxiomClass.METRIC,
    },
    AxiomClass.PSEUDOULTRAMETRIC: {
        AxiomClass.NONE,
        AxiomClass.PSEUDOMETRIC,
        AxiomClass.PSEUDOULTRAMETRIC,
    },
    AxiomClass.ULTRAMETRIC: set(AxiomClass),
}


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric square matrix of exact distances with a verified class."""

    vertices: tuple[Vertex, ...]
    entries: tuple[tuple[Weight, ...], ...]
    axiom_class: AxiomClass
    _ranks: np.ndarray = field(compare=False, repr=False)
    _index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def entry(self, u: Vertex, v: Vertex) -> Weight:
        return self.entries[self._index[u]][self._index[v]]

    def rank_array(self) -> np.ndarray:
        """Read-only integer recoding of the entries (order-isomorphic)."""
        return self._ranks


class PartialOrderResult(Enum):
    EQUAL = "equal"
    FIRST_LESS = "first-less"
    SECOND_LESS = "second-less"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check; carries a witness when it fails.

    Witness shapes: (x, y) for an asymmetric or zero off-diagonal pair,
    (x,) for a nonzero diagonal entry, (x, z, y) for a triple where the
    distance x-y exceeds the bound through z.
    """

    passed: bool
    kind: str = ""
    witness: tuple[Vertex, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


PASS = Verdict(True)


def _recode_ranks(rows: Sequence[Sequence[Weight]]) -> np.ndarray:
    """Integer matrix with the same comparison structure as ``rows``.

    Sorting indices instead of hashing values keeps this cheap for
    Fraction entries.
    """
    n = len(rows)
    flat = [rows[i][j] for i in range(n) for j in range(n)]
    order = sorted(range(n * n), key=flat.__getitem__)
    ranks = [0] * (n * n)
    level = 0
    prev = flat[order[0]] if order else None
    for k in order:
        if flat[k] != prev:
            level += 1
            prev = flat[k]
        ranks[k] = level
    return np.asarray(ranks, dtype=np.int32).reshape(n, n)


def _asymmetry_witness(rows) -> tuple[int, int] | None:
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                return (i, j)
    return None


def _diagonal_witness(rows) -> tuple[int] | None:
    for i, row in enumerate(rows):
        if row[i] != 0:
            return (i,)
    return None


def _strong_triangle_witness(ranks: np.ndarray) -> tuple[int, int, int] | None:
    """First (x, z, y) with d(x,y) > max(d(x,z), d(z,y)), else None."""
    n = ranks.shape[0]
    bound = np.empty_like(ranks)
    bad = np.empty(ranks.shape, dtype=bool)
    for z in range(n):
        np.maximum.outer(ranks[:, z], ranks[z, :], out=bound)
        np.greater(ranks, bound, out=bad)
        if bad.any():
            x, y = np.argwhere(bad)[0]
            return (int(x), z, int(y))
    return None


def _triangle_witness(rows) -> tuple[int, int, int] | None:
    """First (x, z, y) with d(x,y) > d(x,z) + d(z,y), exact arithmetic."""
    n = len(rows)
    for z in range(n):
        rz = rows[z]
        for x in range(n):
            rx = rows[x]
            dxz = rx[z]
            for y in range(n):
                if rx[y] > dxz + rz[y]:
                    return (x, z, y)
    return None


def _zero_offdiagonal_witness(ranks: np.ndarray) -> tuple[int, int] | None:
    n = ranks.shape[0]
    off = ranks.copy()
    np.fill_diagonal(off, 1)
    bad = off == 0
    if bad.any():
        x, y = np.argwhere(bad)[0]
        return (int(x), int(y))
    return None


def _classify(rows, ranks: np.ndarray) -> AxiomClass:
    # Symmetry and constant diagonal are rank questions (the recoding
    # preserves equality); only the diagonal's value needs one exact look.
    diag = ranks.diagonal()
    if not np.array_equal(ranks, ranks.T) or (diag != diag[0]).any():
        return AxiomClass.NONE
    if rows[0][0] != 0:
        return AxiomClass.NONE
    strong = _strong_triangle_witness(ranks) is None
    if not strong and _triangle_witness(rows) is not None:
        return AxiomClass.NONE
    positive = _zero_offdiagonal_witness(ranks) is None
    if strong:
        return AxiomClass.ULTRAMETRIC if positive else AxiomClass.PSEUDOULTRAMETRIC
    return AxiomClass.METRIC if positive else AxiomClass.PSEUDOMETRIC


def _finish(vertices: tuple[Vertex, ...], rows, ranks: np.ndarray) -> DistanceMatrix:
    cls = _classify(rows, ranks)
    entries = tuple(tuple(row) for row in rows)
    ranks.flags.writeable = False
    index = {v: i for i, v in enumerate(vertices)}
    return DistanceMatrix(vertices, entries, cls, ranks, index)


def distance_matrix(vertices: Sequence[Vertex], entries) -> DistanceMatrix:
    """Build a matrix from raw entries, verifying its axiom class.

    Entries may be Fractions, ints or strings; the square shape is
    required, symmetry is not (an asymmetric matrix classifies as
    ``none`` and validate will name the offending pair).
    """
    verts = tuple(vertices)
    n = len(verts)
    if len(set(verts)) != n or n == 0:
        raise VertexMismatchError("vertex names must be nonempty and distinct")
    rows = [[to_weight(x) for x in row] for row in entries]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise VertexMismatchError(f"entries must form a {n}x{n} square")
    return _finish(verts, rows, _recode_ranks(rows))


def validate(m: DistanceMatrix, target: AxiomClass) -> Verdict:
    """Check the entries against ``target`` from scratch.

    Returns PASS or a Verdict carrying the first witness in scan order:
    asymmetric pair, nonzero diagonal, violating triple, zero
    off-diagonal pair.
    """
    rows = m.entries
    names = m.vertices
    w = _asymmetry_witness(rows)
    if w:
        return Verdict(False, "asymmetry", (names[w[0]], names[w[1]]))
    w = _diagonal_witness(rows)
    if w:
        return Verdict(False, "nonzero-diagonal", (names[w[0]],))
    if target is AxiomClass.NONE:
        return PASS
    ranks = m.rank_array()
    if target in (AxiomClass.PSEUDOULTRAMETRIC, AxiomClass.ULTRAMETRIC):
        w = _strong_triangle_witness(ranks)
        if w:
            return Verdict(
                False, "strong-triangle", (names[w[0]], names[w[1]], names[w[2]])
            )
    else:
        w = _triangle_witness(rows)
        if w:
            return Verdict(
                False, "triangle", (names[w[0]], names[w[1]], names[w[2]])
            )
    if target in (AxiomClass.METRIC, AxiomClass.ULTRAMETRIC):
        w = _zero_offdiagonal_witness(ranks)
        if w:
            return Verdict(
                False, "zero-off-diagonal", (names[w[0]], names[w[1]])
            )
    return PASS


def _require_connected(g: WeightedGraph) -> None:
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedError(comps.blocks[0][0], comps.blocks[1][0])


def subdominant_matrix(g: WeightedGraph) -> DistanceMatrix:
    """Greatest pseudoultrametric lying edgewise below the weighting.

    Equals the minimax path distance: the least possible bottleneck over
    all paths joining each pair. Computed by merging components in order
    of increasing edge weight (single-linkage agglomeration); the weight
    at which two vertices first share a component is exactly their least
    path bottleneck. Raises DisconnectedError naming vertices from two
    components when no extension below the weight exists at all.
    """
    _require_connected(g)
    verts = g.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}

    values = np.empty((n, n), dtype=object)
    values.fill(Fraction(0))
    ranks = np.zeros((n, n), dtype=np.int32)

    parent = list(range(n))
    members: list[list[int]] = [[i] for i in range(n)]

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    level = 0
    last_w = Fraction(0)
    for u, v, w in sorted(g.weighted_edges(), key=lambda e: e[2]):
        ra, rb = find(idx[u]), find(idx[v])
        if ra == rb:
            continue
        if w > last_w:
            level += 1
            last_w = w
        if len(members[ra]) < len(members[rb]):
            ra, rb = rb, ra
        a_idx, b_idx = members[ra], members[rb]
        rows_a = np.asarray(a_idx)[:, None]
        rows_b = np.asarray(b_idx)[:, None]
        values[rows_a, b_idx] = w
        values[rows_b, a_idx] = w
        ranks[rows_a, b_idx] = level
        ranks[rows_b, a_idx] = level
        parent[rb] = ra
        a_idx.extend(b_idx)
        members[rb] = []

    return _finish(verts, values.tolist(), ranks)


def shortest_path_matrix(g: WeightedGraph) -> DistanceMatrix:
    """Greatest pseudometric lying edgewise below the weighting.

    Min-sum path distance, computed exactly by Dijkstra from every
    source (weights are nonnegative by construction).
    """
    _require_connected(g)
    verts = g.vertices
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    rows = [[Fraction(0)] * n for _ in range(n)]

    for s in verts:
        dist: dict[Vertex, Fraction] = {s: Fraction(0)}
        done: set[Vertex] = set()
        heap: list[tuple[Fraction, int, Vertex]] = [(Fraction(0), idx[s], s)]
        while heap:
            d, _, u = heapq.heappop(heap)
            if u in done:
                continue
            done.add(u)
            for nb in g.neighbors(u):
                cand = d + g.weight(u, nb)
                if nb not in dist or cand < dist[nb]:
                    dist[nb] = cand
                    heapq.heappush(heap, (cand, idx[nb], nb))
        srow = rows[idx[s]]
        for v, d in dist.items():
            srow[idx[v]] = d

    return _finish(verts, rows, _recode_ranks(rows))


def compare(m1: DistanceMatrix, m2: DistanceMatrix) -> PartialOrderResult:
    """Entrywise comparison under the usual partial order on distances."""
    if m1.vertices != m2.vertices:
        raise VertexMismatchError("matrices are over different vertex lists")
    le = ge = True
    n = len(m1.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = m1.entries[i][j], m2.entries[i][j]
            if a < b:
                ge = False
            elif a > b:
                le = False
    if le and ge:
        return PartialOrderResult.EQUAL
    if le:
        return PartialOrderResult.FIRST_LESS
    if ge:
        return PartialOrderResult.SECOND_LESS
    return PartialOrderResult.INCOMPARABLE


def quotient(m: DistanceMatrix) -> tuple[Partition, DistanceMatrix]:
    """Collapse zero-distance classes, turning a pseudoultrametric into
    an ultrametric.

    Blocks are ordered by first appearance and named after their first
    member; the distance between blocks is the (constant) distance
    between any members.
    """
    if not m.axiom_class.satisfies(AxiomClass.PSEUDOULTRAMETRIC):
        raise NotPseudoultrametricError(
            f"matrix class is {m.axiom_class.value}, need pseudoultrametric"
        )
    n = len(m.vertices)
    block_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if block_of[i] >= 0:
            continue
        b = len(reps)
        block_of[i] = b
        reps.append(i)
        for j in range(i + 1, n):
            if block_of[j] < 0 and m.entries[i][j] == 0:
                block_of[j] = b
    blocks = tuple(
        tuple(m.vertices[i] for i in range(n) if block_of[i] == b)
        for b in range(len(reps))
    )
    names = tuple(m.vertices[r] for r in reps)
    rows = [[m.entries[a][b] for b in reps] for a in reps]
    return Partition(blocks), distance_matrix(names, rows)


@dataclass(frozen=True)
class Dendrogram:
    """Merge tree of an ultrametric: distance = 2 x height of the
    lowest common ancestor.

    Leaves carry a label and height 0; internal nodes carry height =
    merge distance / 2 and at least two children. Simultaneous merges at
    one height collapse into a single multiway node, making the tree a
    canonical function of the matrix. Children are ordered by the
    smallest vertex name they contain.
    """

    height: Weight
    children: tuple["Dendrogram", ...]
    label: Vertex | None = None

    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[Vertex]:
        if self.is_leaf():
            return [self.label]  # type: ignore[list-item]
        out: list[Vertex] = []
        for ch in self.children:
            out.extend(ch.leaves())
        return out

    def min_leaf(self) -> Vertex:
        return min(self.leaves())


def dendrogram(m: DistanceMatrix) -> Dendrogram:
    """Single-linkage merge tree of an ultrametric matrix.

    Requires an actual ultrametric; quotient a pseudoultrametric first.
    """
    if m.axiom_class is not AxiomClass.ULTRAMETRIC:
        raise NotUltrametricError(
            f"matrix class is {m.axiom_class.value}, need ultrametric"
        )
    n = len(m.vertices)
    nodes: dict[int, Dendrogram] = {
        i: Dendrogram(Fraction(0), (), m.vertices[i]) for i in range(n)
    }
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pairs = sorted(
        ((m.entries[i][j], i, j) for i in range(n) for j in range(i + 1, n)),
        key=lambda t: t[0],
    )
    pos = 0
    while pos < len(pairs):
        h = pairs[pos][0]
        batch = []
        while pos < len(pairs) and pairs[pos][0] == h:
            batch.append(pairs[pos])
            pos += 1
        # All pairs at one height merge simultaneously into multiway
        # nodes: group the touched roots into connected clusters first.
        grouping: dict[int, set[int]] = {}
        for _, i, j in batch:
            ri, rj = find(i), find(j)
            if ri == rj:
                continue
            gi = grouping.setdefault(ri, {ri})
            gj = grouping.setdefault(rj, {rj})
            if gi is gj:
                continue
            if len(gi) < len(gj):
                gi, gj = gj, gi
            gi.update(gj)
            for r in gj:
                grouping[r] = gi
        done: set[int] = set()
        for group in grouping.values():
            if id(group) in done:
                continue
            done.add(id(group))
            roots = sorted(group)
            children = sorted(
                (nodes[r] for r in roots), key=Dendrogram.min_leaf
            )
            merged = Dendrogram(h / 2, tuple(children))
            keep = roots[0]
            for r in roots[1:]:
                parent[r] = keep
                del nodes[r]
            nodes[keep] = merged
    (root,) = nodes.values()
    return root


def matrix_from_dendrogram(
    d: Dendrogram, vertices: Sequence[Vertex] | None = None
) -> DistanceMatrix:
    """Reconstruct the ultrametric a dendrogram encodes.

    Vertex order defaults to the tree's leaf order; passing an explicit
    order (a permutation of the leaves) reproduces a particular matrix
    exactly.
    """
    leaf_order = d.leaves()
    verts = tuple(vertices) if vertices is not None else tuple(leaf_order)
    if sorted(verts) != sorted(leaf_order):
        raise VertexMismatchError("vertex list must be a permutation of leaves")
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    rows = [[Fraction(0)] * n for _ in range(n)]

    def fill(node: Dendrogram) -> list[Vertex]:
        if node.is_leaf():
            return [node.label]  # type: ignore[list-item]
        groups = [fill(ch) for ch in node.children]
        dist = 2 * node.height
        for gi, gj in combinations(groups, 2):
            for a in gi:
                for b in gj:
                    rows[idx[a]][idx[b]] = dist
                    rows[idx[b]][idx[a]] = dist
        return [v for g in groups for v in g]

    fill(d)
    return distance_matrix(verts, rows)


INFINITE_EXPONENT = math.inf


def betweenness_exponent(m: DistanceMatrix, tol: float = 1e-9) -> float:
    """Supremum of the powers to which the matrix stays a (pseudo)metric.

    Per triple with sorted distances a >= b >= c: no constraint when
    a = b (the power of a max-bound never breaks); exactly 1 when
    a = b + c (the triangle inequality is tight and any higher power
    breaks it); otherwise the unique root of (b/a)^x + (c/a)^x = 1,
    found by bisection to ``tol``. The result is the minimum over all
    triples, or the Infinite sentinel (math.inf) when nothing
    constrains the power, which happens exactly for pseudoultrametrics.
    """
    if not m.axiom_class.satisfies(AxiomClass.PSEUDOMETRIC):
        raise NotPseudometricError(
            f"matrix class is {m.axiom_class.value}, need at least pseudometric"
        )
    rows = m.entries
    best = INFINITE_EXPONENT
    n = len(m.vertices)
    for i, j, k in combinations(range(n), 3):
        a, b, c = sorted((rows[i][j], rows[i][k], rows[j][k]), reverse=True)
        if a == b:
            continue
        if a == b + c:
            return 1.0
        r1, r2 = float(b / a), float(c / a)
        if r1 >= 1.0:
            # b < a exactly but b/a rounds to 1.0; the root for this
            # triple sits beyond float pow resolution, so it cannot be
            # the binding minimum at any representable exponent.
            continue

        def excess(alpha: float) -> float:
            return r1**alpha + r2**alpha - 1.0

        hi = 2.0
        while excess(hi) >= 0.0:
            hi *= 2.0
        lo = 1.0
        while hi - lo > tol:
            mid = (lo + hi) / 2.0
            if excess(mid) >= 0.0:
                lo = mid
            else:
                hi = mid
        best = min(best, (lo + hi) / 2.0)
    return best


def matrix_to_complete_graph(m: DistanceMatrix) -> WeightedGraph:
    """Complete graph whose weight on each pair is the matrix entry."""
    edges = [
        (m.vertices[i], m.vertices[j], m.entries[i][j])
        for i, j in combinations(range(len(m.vertices)), 2)
    ]
    return build_graph(m.vertices, edges)
