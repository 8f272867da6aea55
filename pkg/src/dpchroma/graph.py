"""Simple undirected graphs and the structural primitives built on them.

Vertices are the dense integers ``0..n-1``; edges are unordered pairs stored
as sorted tuples.  Everything here is a pure function of its inputs: graphs
are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import islice
from typing import Iterable, Iterator, Optional

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graphs or graph arguments."""


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop edge ({u}, {v}) not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertex set ``{0, ..., n-1}``.

    ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``; isolated
    vertices are permitted.  Use :func:`build_graph` to construct with
    validation.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a :class:`Graph`.

    Rejects loops, duplicate edges (after normalization to ``u < v``) and
    endpoints outside ``0..n-1``.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph merging duplicates silently (internal fast path)."""
    return Graph(n, tuple(sorted({_norm_edge(u, v) for u, v in edges})))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Return ``g - e``; all vertices are kept."""
    e = _norm_edge(*e)
    if e not in g.edge_set:
        raise GraphError(f"edge {e} not in graph")
    return Graph(g.n, tuple(x for x in g.edges if x != e))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Return ``g - v`` with ids relabeled densely, plus the old->new map."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} not in graph")
    relabel = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if a != v and b != v]
    return Graph(g.n - 1, tuple(sorted(edges))), relabel


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract ``e``, merging any resulting parallel edges.

    The two ends are identified into the lower id; ids above the higher end
    shift down by one.  The result is again simple.
    """
    u, v = _norm_edge(*e)
    if (u, v) not in g.edge_set:
        raise GraphError(f"edge {(u, v)} not in graph")
    merged = set()
    for a, b in g.edges:
        if (a, b) == (u, v):
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            merged.add(_norm_edge(a2, b2))
    relabel = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    relabel[v] = relabel[u]
    edges = {(min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) for a, b in merged}
    return Graph(g.n - 1, tuple(sorted(edges)))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest id."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices`` (relabeled densely) plus old->new map."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} not in graph")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if a in keep and b in keep]
    return Graph(len(vs), tuple(sorted(edges))), relabel


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    Every edge lies in exactly one block; isolated vertices appear as
    singleton blocks so that the blocks cover all vertices.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition via the classic low-link edge stack."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    stack: list[Edge] = []
    block_edges: list[list[Edge]] = []
    cuts: set[int] = set()
    timer = 0

    def dfs(root: int) -> None:
        nonlocal timer
        work = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        children_of_root = 0
        while work:
            x, it = work[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    parent[y] = x
                    stack.append((x, y))
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        children_of_root += 1
                    work.append((y, iter(g.adj[y])))
                    advanced = True
                    break
                elif y != parent[x] and disc[y] < disc[x]:
                    stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    grp: list[Edge] = []
                    while stack:
                        a, b = stack.pop()
                        grp.append(_norm_edge(a, b))
                        if (a, b) == (p, x):
                            break
                    block_edges.append(grp)
                    if p != root:
                        cuts.add(p)
        if children_of_root > 1:
            cuts.add(root)

    for s in range(g.n):
        if disc[s] == -1:
            dfs(s)

    blks: list[tuple[int, ...]] = []
    covered: set[int] = set()
    for grp in block_edges:
        vs: set[int] = set()
        for a, b in grp:
            vs.add(a)
            vs.add(b)
        covered |= vs
        blks.append(tuple(sorted(vs)))
    for v in range(g.n):
        if v not in covered:
            blks.append((v,))
    blks.sort()
    return BlockDecomposition(tuple(blks), tuple(sorted(cuts)))


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose removal disconnects their component."""
    out = set()
    for blk in blocks(g).blocks:
        if len(blk) == 2:
            out.add((blk[0], blk[1]))
    return frozenset(out)


class _UndoDSU:
    """Union-find without path compression, supporting rollback."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.trail: list[int] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.trail.append(rb)
        return True

    def undo(self) -> None:
        rb = self.trail.pop()
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def _spanning_trees_iter(g: Graph) -> Iterator[frozenset[Edge]]:
    n = g.n
    if n <= 1:
        yield frozenset()
        return
    edges = list(g.edges)
    ne = len(edges)
    dsu = _UndoDSU(n)
    chosen: list[Edge] = []

    def connectable(i: int) -> bool:
        # Can the remaining edges edges[i:] still merge all current classes?
        tp = [dsu.find(v) for v in range(n)]

        def tfind(x: int) -> int:
            while tp[x] != x:
                tp[x] = tp[tp[x]]
                x = tp[x]
            return x

        classes = len({tfind(v) for v in range(n)})
        for a, b in edges[i:]:
            ra, rb = tfind(a), tfind(b)
            if ra != rb:
                tp[ra] = rb
                classes -= 1
                if classes == 1:
                    return True
        return classes == 1

    def rec(i: int, ncomp: int) -> Iterator[frozenset[Edge]]:
        if ncomp == 1:
            yield frozenset(chosen)
            return
        if i == ne:
            return
        a, b = edges[i]
        if dsu.find(a) != dsu.find(b):
            dsu.union(a, b)
            chosen.append(edges[i])
            yield from rec(i + 1, ncomp - 1)
            chosen.pop()
            dsu.undo()
            if connectable(i + 1):
                yield from rec(i + 1, ncomp)
        else:
            yield from rec(i + 1, ncomp)

    yield from rec(0, n)


def spanning_trees(g: Graph, cap: int = 100000) -> Iterator[frozenset[Edge]]:
    """Enumerate the distinct spanning trees of a connected graph.

    Trees are emitted as frozensets of edges, in the deterministic order of
    include-first recursion over the sorted edge list, stopping after ``cap``
    trees.  Compare the consumed count against :func:`spanning_tree_count`
    to know whether the enumeration was exhaustive.
    """
    if not is_connected(g):
        raise GraphError("spanning trees require a connected graph")
    return islice(_spanning_trees_iter(g), cap)


def _det_bareiss(a: list[list[int]]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees by the Kirchhoff determinant, exactly."""
    n = g.n
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _det_bareiss(minor)


def simplicial_vertices(g: Graph) -> list[int]:
    """Vertices whose neighborhood induces a complete graph (or is empty)."""
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        if all(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1:]):
            out.append(v)
    return out


def perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """A perfect elimination ordering, or ``None`` when none exists.

    Greedy simplicial-vertex removal; succeeds exactly on chordal graphs.
    """
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    order: list[int] = []
    remaining = set(range(g.n))
    while remaining:
        pick = None
        for v in sorted(remaining):
            nb = sorted(adj[v])
            if all(b in adj[a] for i, a in enumerate(nb) for b in nb[i + 1:]):
                pick = v
                break
        if pick is None:
            return None
        order.append(pick)
        for w in adj[pick]:
            adj[w].discard(pick)
        del adj[pick]
        remaining.discard(pick)
    return order


def coloring_number(g: Graph) -> int:
    """1 + degeneracy: smallest d with an ordering of back-degrees < d."""
    if g.n == 0:
        return 0
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    remaining = set(range(g.n))
    worst = 0
    while remaining:
        v = min(remaining, key=lambda x: (len(adj[x]), x))
        worst = max(worst, len(adj[v]))
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]
        remaining.discard(v)
    return worst + 1


CANONICAL_LIMIT = 10


def canonical_key(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Exact canonical form for small graphs: equal keys iff isomorphic.

    Color refinement followed by exhaustive individualization; intended for
    graphs with at most ``limit`` vertices (raises :class:`GraphError` above
    that, letting callers fall back to a labeled key).
    """
    n = g.n
    if n > limit:
        raise GraphError(f"canonical form limited to {limit} vertices, got {n}")
    if n == 0:
        return b"\x00"
    npairs = n * (n - 1) // 2
    width = (npairs + 7) // 8
    ne = len(g.edges)
    pair_index = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pair_index[(i, j)] = k
            k += 1
    if ne == 0 or ne == npairs:
        code = 0
        for a, b in g.edges:
            code |= 1 << pair_index[(a, b)]
        return bytes([n]) + code.to_bytes(width, "big")

    adj = g.adj

    def refine(colors: list[int]) -> list[int]:
        while True:
            sig = [
                (colors[v], tuple(sorted(colors[u] for u in adj[v])))
                for v in range(n)
            ]
            ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
            new = [ranks[sig[v]] for v in range(n)]
            if new == colors:
                return colors
            colors = new

    best: Optional[int] = None

    def leaf_code(colors: list[int]) -> int:
        pos = [0] * n
        for v in range(n):
            pos[v] = colors[v]
        code = 0
        for a, b in g.edges:
            i, j = pos[a], pos[b]
            if i > j:
                i, j = j, i
            code |= 1 << pair_index[(i, j)]
        return code

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        cell_of: dict[int, list[int]] = {}
        for v in range(n):
            cell_of.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cell_of):
            if len(cell_of[c]) > 1:
                target = cell_of[c]
                break
        if target is None:
            code = leaf_code(colors)
            if best is None or code < best:
                best = code
            return
        for v in sorted(target):
            branched = [c * 2 + 1 for c in colors]
            branched[v] = colors[v] * 2
            search(branched)

    search([0] * n)
    assert best is not None
    return bytes([n]) + best.to_bytes(width, "big")
