"""Generators for the graph families used throughout the package:
generalized theta graphs, triangle-gluing closures, clique-sums, joins,
standard small graphs, and a catalog of fixed benchmark graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError, build_graph, canonical_key, from_edges


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path(n: int) -> Graph:
    """The path on n vertices (n-1 edges)."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """The cycle on n >= 3 vertices."""
    if n < 3:
        raise GraphError(f"cycles need at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to all others."""
    if n < 1:
        raise GraphError("stars need at least one vertex")
    return build_graph(n, [(0, i) for i in range(1, n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return build_graph(g1.n + g2.n, list(g1.edges) + shifted)


@dataclass(frozen=True)
class ThetaSpec:
    """Path lengths a_1 <= ... <= a_k joining the two hubs, k >= 2."""

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        ls = self.lengths
        if len(ls) < 2:
            raise GraphError("theta graphs need at least two paths")
        if any(a < 1 for a in ls):
            raise GraphError("path lengths must be positive")
        if tuple(sorted(ls)) != ls:
            raise GraphError("path lengths must be sorted ascending")
        if sum(1 for a in ls if a == 1) > 1:
            raise GraphError("at most one unit-length path (no parallel edges)")
        if ls[0] + ls[1] < 3:
            raise GraphError("the two shortest paths must sum to at least 3")


def theta(lengths: Sequence[int]) -> Graph:
    """Generalized theta graph: hubs 0 and 1, internally disjoint paths.

    Path i of length a_i occupies a_i - 1 consecutive new ids, so layouts
    are deterministic.
    """
    spec = ThetaSpec(tuple(sorted(lengths)))
    edges: list[tuple[int, int]] = []
    nxt = 2
    for a in spec.lengths:
        if a == 1:
            edges.append((0, 1))
            continue
        chain = [0] + list(range(nxt, nxt + a - 1)) + [1]
        nxt += a - 1
        edges.extend((chain[i], chain[i + 1]) for i in range(a))
    return build_graph(nxt, edges)


def phi_expand(q: Graph, e: tuple[int, int]) -> Graph:
    """Glue a triangle onto edge e: one new vertex adjacent to both ends."""
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in q.edge_set:
        raise GraphError(f"edge {e} not in graph")
    return build_graph(q.n + 1, list(q.edges) + [(e[0], q.n), (e[1], q.n)])


def phi_family(q: Graph, depth: int, key_limit: Optional[int] = None) -> Iterator[Graph]:
    """All triangle-gluing expansions of q up to ``depth`` new vertices.

    Members are deduplicated up to isomorphism by canonical form and yielded
    in breadth-first order, starting with q itself.
    """
    if not q.edges:
        raise GraphError("the triangle-gluing closure needs at least one edge")
    limit = key_limit if key_limit is not None else max(10, q.n + depth)
    seen = {canonical_key(q, limit)}
    layer = [q]
    yield q
    for _ in range(depth):
        nxt: list[Graph] = []
        for g in layer:
            for e in g.edges:
                expanded = phi_expand(g, e)
                key = canonical_key(expanded, limit)
                if key not in seen:
                    seen.add(key)
                    nxt.append(expanded)
                    yield expanded
        layer = nxt


def clique_sum(
    g1: Graph, g2: Graph, clique1: Sequence[int], clique2: Sequence[int]
) -> Graph:
    """Glue g1 and g2 by identifying two k-cliques pointwise, k >= 1.

    Vertices of g1 keep their ids; the unglued vertices of g2 follow in
    ascending order of their original ids.
    """
    k = len(clique1)
    if k < 1 or k != len(clique2):
        raise GraphError("gluing needs equal-size nonempty cliques")
    if len(set(clique1)) != k or len(set(clique2)) != k:
        raise GraphError("gluing sets must not repeat vertices")
    for g, cl in ((g1, clique1), (g2, clique2)):
        for i, a in enumerate(cl):
            if not (0 <= a < g.n):
                raise GraphError(f"vertex {a} not in graph")
            for b in cl[i + 1:]:
                if not g.has_edge(a, b):
                    raise GraphError(f"gluing set is not a clique: ({a}, {b}) missing")
    relabel = {}
    for i, v in enumerate(clique2):
        relabel[v] = clique1[i]
    nxt = g1.n
    for v in range(g2.n):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    edges = set(g1.edges)
    for a, b in g2.edges:
        x, y = relabel[a], relabel[b]
        edges.add((min(x, y), max(x, y)))
    return from_edges(nxt, edges)


def join_complete(g: Graph, p: int) -> Graph:
    """K_p joined to g: p new mutually adjacent vertices see all of g."""
    if p < 1:
        raise GraphError(f"join needs p >= 1, got {p}")
    edges = list(g.edges)
    new = list(range(g.n, g.n + p))
    edges.extend((a, b) for i, a in enumerate(new) for b in new[i + 1:])
    edges.extend((v, w) for w in new for v in range(g.n))
    return build_graph(g.n + p, edges)


# ---------------------------------------------------------------------------
# Fixed benchmark graphs (hard-coded edge lists; ids are one labeling choice,
# so comparisons belong at the isomorphism level).

_NAMED_EDGE_LISTS: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "fig1-G1": (
        8,
        (
            # inner 4-cycle
            (1, 4), (4, 6), (3, 6), (1, 3),
            # outer 8-cycle
            (0, 1), (1, 2), (2, 4), (4, 7), (6, 7), (5, 6), (3, 5), (0, 3),
        ),
    ),
    "fig1-G2": (
        10,
        (
            # 10-cycle: bottom row 0-1-2-3-4, up to 9, back along the top 9-8-7-6-5, down to 0
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 9), (8, 9), (7, 8), (6, 7),
            (5, 6), (0, 5),
            (2, 8), (3, 8), (4, 8), (2, 7),
        ),
    ),
    "fig2-G1": (
        8,
        (
            (0, 1), (1, 3), (3, 6), (5, 6), (2, 3), (3, 4), (3, 7),
            (0, 5), (1, 2), (2, 4), (4, 7), (6, 7),
        ),
    ),
    "petersen": (
        10,
        (
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
        ),
    ),
    "fig2-G3": (
        12,
        (
            (0, 1), (1, 2), (2, 5), (5, 8), (4, 8), (3, 7), (7, 10), (8, 10),
            (8, 11), (9, 11), (6, 9),
            (3, 4), (4, 5), (5, 6), (0, 4),
        ),
    ),
}


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph


def named_graph(name: str) -> NamedGraph:
    """Look up a bundled benchmark graph by its catalog id."""
    if name not in _NAMED_EDGE_LISTS:
        known = ", ".join(sorted(_NAMED_EDGE_LISTS))
        raise GraphError(f"unknown graph name {name!r}; known: {known}")
    n, edges = _NAMED_EDGE_LISTS[name]
    return NamedGraph(name, build_graph(n, edges))


def named_graph_ids() -> list[str]:
    return sorted(_NAMED_EDGE_LISTS)
