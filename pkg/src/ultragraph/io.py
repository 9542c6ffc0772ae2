"""Text formats: edge lists in, matrices and trees out.

All serialization is exact. Weights print as the shortest terminating
decimal when one exists, else as ``p/q``; parsing either form recovers
the value bit-for-bit, so emit-parse round trips are identities. Newick
output is decimal-only by convention, so non-terminating branch lengths
require an explicit approximation request and carry the exact ratio in
a comment.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import (
    DuplicateEdgeError,
    InexactDecimalError,
    ParseError,
    SelfLoopError,
)
from .graph import Vertex, Weight, WeightedGraph, build_graph, to_weight
from .metrics import Dendrogram, DistanceMatrix, distance_matrix


def parse_weight(text: str) -> Weight:
    """Exact nonnegative weight from a decimal or ``p/q`` literal."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad weight literal {text!r}") from None
    return to_weight(value)


def format_weight(w) -> str:
    """Shortest terminating decimal if one exists, else ``p/q``."""
    w = Fraction(w)
    den = w.denominator
    if den == 1:
        return str(w.numerator)
    twos = fives = 0
    rest = den
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{w.numerator}/{w.denominator}"
    k = max(twos, fives)
    scaled = w.numerator * 10**k // den
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def parse_edge_list(text: str) -> WeightedGraph:
    """Graph from `u v weight` lines.

    Blank lines and `#` comments are skipped; `vertex <name>` declares a
    vertex without edges (re-declaring is harmless). Vertex order is
    first-appearance order.
    """
    vertices: list[Vertex] = []
    known: set[Vertex] = set()
    edges: list[tuple[Vertex, Vertex, Weight]] = []
    edge_keys: set[frozenset[Vertex]] = set()

    def declare(v: Vertex) -> None:
        if v not in known:
            known.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "vertex":
            declare(tokens[1])
            continue
        if len(tokens) != 3:
            raise ParseError(
                "expected 'u v weight' or 'vertex name'", line=lineno
            )
        u, v, wtext = tokens
        if u == v:
            raise SelfLoopError(f"line {lineno}: edge {{{u!r},{v!r}}} is a self-loop")
        key = frozenset((u, v))
        if key in edge_keys:
            raise DuplicateEdgeError(f"line {lineno}: edge {{{u!r},{v!r}}} given twice")
        edge_keys.add(key)
        try:
            w = Fraction(wtext)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight literal {wtext!r}", line=lineno) from None
        declare(u)
        declare(v)
        edges.append((u, v, w))

    if not vertices:
        raise ParseError("no vertices declared")
    return build_graph(vertices, edges)


def emit_edge_list(g: WeightedGraph) -> str:
    """Edge-list text that parses back to an identical graph.

    Every vertex is declared up front so the parse recovers the exact
    vertex order even when it differs from edge appearance order.
    """
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{u} {v} {format_weight(w)}" for u, v, w in g.weighted_edges()]
    return "\n".join(lines)


def emit_matrix(m: DistanceMatrix, format: str = "json") -> str:
    """Serialize a matrix as json or csv; round trips are bit-exact."""
    if format == "json":
        doc = {
            "vertices": list(m.vertices),
            "matrix": [[format_weight(x) for x in row] for row in m.entries],
            "axiom_class": m.axiom_class.value,
        }
        return json.dumps(doc, separators=(",", ":"))
    if format == "csv":
        for name in m.vertices:
            if "," in name or "\n" in name:
                raise ParseError(f"vertex name {name!r} cannot appear in csv")
        lines = ["," + ",".join(m.vertices)]
        for name, row in zip(m.vertices, m.entries):
            lines.append(name + "," + ",".join(format_weight(x) for x in row))
        return "\n".join(lines)
    raise ParseError(f"unknown matrix format {format!r}")


def parse_matrix(text: str, format: str = "json") -> DistanceMatrix:
    """Inverse of emit_matrix; the axiom class is re-verified, not trusted."""
    if format == "json":
        try:
            doc = json.loads(text)
            vertices = doc["vertices"]
            rows = doc["matrix"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad matrix json: {exc}") from None
        if not isinstance(vertices, list) or not isinstance(rows, list):
            raise ParseError("bad matrix json: wrong field types")
        return distance_matrix(vertices, [[parse_weight(x) for x in r] for r in rows])
    if format == "csv":
        lines = [ln for ln in text.splitlines() if ln]
        if not lines or not lines[0].startswith(","):
            raise ParseError("bad matrix csv: missing header")
        vertices = lines[0].split(",")[1:]
        rows = []
        if len(lines) != len(vertices) + 1:
            raise ParseError("bad matrix csv: row count mismatch")
        for name, ln in zip(vertices, lines[1:]):
            cells = ln.split(",")
            if len(cells) != len(vertices) + 1 or cells[0] != name:
                raise ParseError(f"bad matrix csv row for {name!r}")
            rows.append([parse_weight(x) for x in cells[1:]])
        return distance_matrix(vertices, rows)
    raise ParseError(f"unknown matrix format {format!r}")


def emit_newick(d: Dendrogram, approx_digits: int | None = None) -> str:
    """Newick form of a dendrogram; leaf-to-leaf path length equals the
    ultrametric distance.

    Branch lengths must terminate as decimals; otherwise pass
    ``approx_digits`` to emit a rounded decimal annotated with the exact
    ratio in a bracket comment.
    """

    def fmt(length: Fraction) -> str:
        den = length.denominator
        reduced = den
        for p in (2, 5):
            while reduced % p == 0:
                reduced //= p
        if reduced == 1:
            return format_weight(length)
        if approx_digits is None:
            raise InexactDecimalError(
                f"branch length {length} has no terminating decimal; "
                "pass approx_digits to allow rounding"
            )
        scaled = round(length * 10**approx_digits)
        approx = format_weight(Fraction(scaled, 10**approx_digits))
        return f"{approx}[{length.numerator}/{length.denominator}]"

    def render(node: Dendrogram) -> str:
        if node.is_leaf():
            return str(node.label)
        parts = []
        for ch in sorted(node.children, key=Dendrogram.min_leaf):
            parts.append(render(ch) + ":" + fmt(node.height - ch.height))
        return "(" + ",".join(parts) + ")"

    return render(d) + ";"
