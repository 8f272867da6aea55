"""Edge girth profiles, the leading-term identity, the chromatic gap test,
and spanning-tree certificates with odd-cycle witnesses.

For an edge e, ell(e) is the length of a shortest cycle through e (infinity
for bridges).  A tree certificate exhibits a spanning tree whose co-tree
edges all have odd ell(e) together with per-edge witness cycles; the strict
variant forces each witness to be the fundamental cycle of its edge.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .chromatic import chromatic_polynomial
from .graph import (
    Edge,
    Graph,
    GraphError,
    bridges,
    contract_edge,
    delete_edge,
    is_connected,
    spanning_tree_count,
    spanning_trees,
)
from .polynomial import Polynomial

INFINITY = math.inf


class SearchInconclusiveError(RuntimeError):
    """The spanning-tree cap was reached before the search could conclude."""


@dataclass(frozen=True)
class EdgeProfile:
    """Shortest-cycle data for one edge."""

    edge: Edge
    ell: float  # positive integer, or math.inf for bridges
    is_bridge: bool
    shortest_cycle_count: int


def _bfs_layers(g: Graph, source: int) -> tuple[list[float], list[int]]:
    """Distances from source and exact counts of shortest paths."""
    dist: list[float] = [INFINITY] * g.n
    count = [0] * g.n
    dist[source] = 0
    count[source] = 1
    queue = [source]
    while queue:
        x = queue.pop(0)
        for y in g.adj[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                count[y] = count[x]
                queue.append(y)
            elif dist[y] == dist[x] + 1:
                count[y] += count[x]
    return dist, count


def edge_profile(g: Graph, e: tuple[int, int]) -> EdgeProfile:
    """ell(e) = 1 + dist(u, v) in G - e, and the number of shortest cycles."""
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in g.edge_set:
        raise GraphError(f"edge {e} not in graph")
    reduced = delete_edge(g, e)
    dist, count = _bfs_layers(reduced, e[0])
    if dist[e[1]] == INFINITY:
        return EdgeProfile(e, INFINITY, True, 0)
    return EdgeProfile(e, int(dist[e[1]]) + 1, False, count[e[1]])


def girth(g: Graph) -> float:
    """Minimum ell(e) over all edges; infinity for forests."""
    best = INFINITY
    for e in g.edges:
        best = min(best, edge_profile(g, e).ell)
    return best


def even_ell_witness(g: Graph) -> Optional[Edge]:
    """The first edge with finite even ell(e), or None."""
    for e in g.edges:
        ell = edge_profile(g, e).ell
        if ell != INFINITY and int(ell) % 2 == 0:
            return e
    return None


def kaul_mudrock_gap(g: Graph, e: tuple[int, int], m: int) -> bool:
    """Exact test of (m-1) P(G-e, m) < m P(G, m).

    When true, the DP color function is strictly below the chromatic
    polynomial at this m.
    """
    if m < 2:
        raise ValueError(f"the gap test needs m >= 2, got {m}")
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in g.edge_set:
        raise GraphError(f"edge {e} not in graph")
    left = (m - 1) * chromatic_polynomial(delete_edge(g, e))(m)
    right = m * chromatic_polynomial(g)(m)
    return left < right


def leading_term_check(g: Graph, e: tuple[int, int]) -> tuple[Polynomial, bool]:
    """The difference x P(G/e, x) - P(G-e, x) and its leading-term audit.

    Passes iff the degree is n - ell(e) + 2 and the leading coefficient is
    (-1)^(ell(e)-1) times the number of shortest cycles through e.
    """
    profile = edge_profile(g, e)
    if profile.is_bridge:
        raise GraphError(f"edge {profile.edge} is a bridge; no cycle through it")
    ell = int(profile.ell)
    diff = Polynomial.x() * chromatic_polynomial(contract_edge(g, profile.edge))
    diff = diff - chromatic_polynomial(delete_edge(g, profile.edge))
    expected_degree = g.n - ell + 2
    expected_lead = (-1) ** (ell - 1) * profile.shortest_cycle_count
    ok = diff.degree == expected_degree and diff.leading_coefficient == expected_lead
    return diff, ok


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class TreeCertificate:
    """Spanning tree plus per-co-tree-edge witness cycles.

    ``witnesses`` maps each co-tree edge to a vertex cycle (starting with the
    edge's two ends) of length exactly ell(e), with ell(e) odd.  For kind
    "gt0" every witness is the fundamental cycle of its edge; for kind "gt"
    every witness edge outside tree+{e} has a strictly smaller ell.
    ``ell_gt`` is the maximum ell over co-tree edges (infinity if none).
    """

    tree: tuple[Edge, ...]
    witnesses: tuple[tuple[Edge, tuple[int, ...]], ...]
    kind: str
    ell_gt: float

    def witness_for(self, e: Edge) -> tuple[int, ...]:
        for edge, cyc in self.witnesses:
            if edge == e:
                return cyc
        raise KeyError(e)


def _tree_path(tree_adj: Mapping[int, list[int]], a: int, b: int) -> list[int]:
    prev: dict[int, int] = {a: a}
    queue = [a]
    while queue:
        x = queue.pop(0)
        if x == b:
            break
        for y in tree_adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def fundamental_cycle(tree: Sequence[Edge], e: Edge) -> tuple[int, ...]:
    """The cycle closed by adding e to the tree, as (u, v, ..., u-adjacent)."""
    tree_adj: dict[int, list[int]] = {}
    for a, b in tree:
        tree_adj.setdefault(a, []).append(b)
        tree_adj.setdefault(b, []).append(a)
    u, v = e
    path = _tree_path(tree_adj, v, u)
    return (u, v) + tuple(path[1:-1])


def _witness_cycle(
    g: Graph,
    e: Edge,
    length: int,
    allowed: frozenset[Edge],
) -> Optional[tuple[int, ...]]:
    """Lexicographically first cycle of the exact length through e whose
    edges all lie in ``allowed`` (which contains e)."""
    u, v = e
    # distances to u through allowed edges, for remaining-length pruning
    adj: dict[int, list[int]] = {x: [] for x in range(g.n)}
    for a, b in g.edges:
        if (a, b) in allowed and (a, b) != e:
            adj[a].append(b)
            adj[b].append(a)
    for x in adj:
        adj[x].sort()
    dist = [INFINITY] * g.n
    dist[u] = 0
    queue = [u]
    while queue:
        x = queue.pop(0)
        for y in adj[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)

    path = [u, v]
    on_path = {u, v}

    def dfs(x: int, remaining: int) -> Optional[tuple[int, ...]]:
        if remaining == 0:
            return tuple(path) if g.has_edge(x, u) and (min(x, u), max(x, u)) in allowed else None
        for y in adj[x]:
            if y in on_path or dist[y] > remaining:
                continue
            path.append(y)
            on_path.add(y)
            found = dfs(y, remaining - 1)
            if found is not None:
                return found
            on_path.discard(y)
            path.pop()
        return None

    if dist[v] == INFINITY and length > 2:
        return None
    return dfs(v, length - 2)


def _certificate_search(
    g: Graph, tree_cap: int, fundamental_only: bool
) -> Optional[TreeCertificate]:
    if not is_connected(g):
        raise GraphError("certificates require a connected graph")
    profiles = {e: edge_profile(g, e) for e in g.edges}

    # Even-ell edges must be tree edges in any certificate; if they already
    # contain a cycle, no spanning tree can absorb them all.
    required = [
        e
        for e in g.edges
        if profiles[e].ell != INFINITY and int(profiles[e].ell) % 2 == 0
    ]
    if _has_cycle(g.n, required):
        return None

    total = spanning_tree_count(g)
    consumed = 0
    for tree in spanning_trees(g, tree_cap):
        consumed += 1
        if any(e not in tree for e in required):
            continue
        cert = _try_tree(g, sorted(tree), profiles, fundamental_only)
        if cert is not None:
            return cert
    if consumed < total:
        raise SearchInconclusiveError(
            f"no certificate within the first {consumed} of {total} spanning trees"
        )
    return None


def _has_cycle(n: int, edges: Sequence[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False


def _try_tree(
    g: Graph,
    tree: list[Edge],
    profiles: Mapping[Edge, EdgeProfile],
    fundamental_only: bool,
) -> Optional[TreeCertificate]:
    tree_set = set(tree)
    cotree = [e for e in g.edges if e not in tree_set]
    witnesses: list[tuple[Edge, tuple[int, ...]]] = []
    ell_gt: float = INFINITY if not cotree else 0
    for e in cotree:
        ell = profiles[e].ell
        if ell == INFINITY or int(ell) % 2 == 0:
            return None
        ell = int(ell)
        ell_gt = max(ell_gt, ell)
        if fundamental_only:
            cyc = fundamental_cycle(tree, e)
            if len(cyc) != ell:
                return None
        else:
            allowed = frozenset(
                x
                for x in g.edges
                if x == e
                or x in tree_set
                or (profiles[x].ell != INFINITY and profiles[x].ell < ell)
            )
            cyc = _witness_cycle(g, e, ell, allowed)
            if cyc is None:
                return None
        witnesses.append((e, cyc))
    kind = "gt0" if fundamental_only else "gt"
    return TreeCertificate(tuple(tree), tuple(witnesses), kind, ell_gt)


def gt_certificate(g: Graph, tree_cap: int = 100000) -> Optional[TreeCertificate]:
    """Search for a spanning tree whose co-tree edges all have odd ell(e)
    and admit witness cycles with strictly smaller ell off the tree.

    Returns the first certificate in deterministic order, or None when the
    exhaustive enumeration proves none exists.  Raises
    :class:`SearchInconclusiveError` if the cap cut the search short.
    """
    return _certificate_search(g, tree_cap, fundamental_only=False)


def gt0_certificate(g: Graph, tree_cap: int = 100000) -> Optional[TreeCertificate]:
    """Same search with each witness forced to be the fundamental cycle."""
    return _certificate_search(g, tree_cap, fundamental_only=True)


def validate_certificate(g: Graph, cert: TreeCertificate) -> None:
    """Re-validate a certificate from scratch; raises on any defect."""
    tree_set = set(cert.tree)
    if len(cert.tree) != max(g.n - 1, 0):
        raise GraphError("certificate tree has the wrong size")
    if any(e not in g.edge_set for e in cert.tree):
        raise GraphError("certificate tree edge not in graph")
    if _has_cycle(g.n, cert.tree):
        raise GraphError("certificate tree contains a cycle")
    cotree = [e for e in g.edges if e not in tree_set]
    witnessed = {e for e, _ in cert.witnesses}
    if witnessed != set(cotree):
        raise GraphError("witnesses do not cover the co-tree edges exactly")
    ells = []
    for e, cyc in cert.witnesses:
        profile = edge_profile(g, e)
        if profile.ell == INFINITY or int(profile.ell) % 2 == 0:
            raise GraphError(f"co-tree edge {e} lacks a finite odd ell")
        ell = int(profile.ell)
        ells.append(ell)
        if len(cyc) != ell or len(set(cyc)) != ell:
            raise GraphError(f"witness for {e} is not a cycle of length {ell}")
        if (min(cyc[0], cyc[1]), max(cyc[0], cyc[1])) != e:
            raise GraphError(f"witness for {e} does not start with the edge")
        cyc_edges = []
        for k in range(len(cyc)):
            a, b = cyc[k], cyc[(k + 1) % len(cyc)]
            if not g.has_edge(a, b):
                raise GraphError(f"witness for {e} uses a non-edge ({a}, {b})")
            cyc_edges.append((min(a, b), max(a, b)))
        if cert.kind == "gt0":
            expected = fundamental_cycle(cert.tree, e)
            if set(cyc_edges) != set(_cycle_edges(expected)):
                raise GraphError(f"witness for {e} is not the fundamental cycle")
        else:
            for x in cyc_edges:
                if x == e or x in tree_set:
                    continue
                other = edge_profile(g, x).ell
                if not (other != INFINITY and other < ell):
                    raise GraphError(
                        f"witness for {e} uses off-tree edge {x} with ell {other} >= {ell}"
                    )
    expected_gt = max(ells) if ells else INFINITY
    if cert.ell_gt != expected_gt:
        raise GraphError(f"ell_gt recorded {cert.ell_gt}, recomputed {expected_gt}")


def _cycle_edges(cyc: Sequence[int]) -> list[Edge]:
    return [
        (min(cyc[k], cyc[(k + 1) % len(cyc)]), max(cyc[k], cyc[(k + 1) % len(cyc)]))
        for k in range(len(cyc))
    ]


def prop_tree_edge_audit(g: Graph, cert: TreeCertificate) -> bool:
    """Audit: every non-bridge tree edge has odd ell(e) <= ell_gt."""
    validate_certificate(g, cert)
    bridge_set = bridges(g)
    for e in cert.tree:
        if e in bridge_set:
            continue
        ell = edge_profile(g, e).ell
        if ell == INFINITY or int(ell) % 2 == 0 or ell > cert.ell_gt:
            return False
    return True


def certificate_to_json(cert: TreeCertificate) -> str:
    return json.dumps(
        {
            "tree": [[u, v] for u, v in cert.tree],
            "witnesses": {f"{u}-{v}": list(cyc) for (u, v), cyc in cert.witnesses},
            "kind": cert.kind,
            "ell_gt": None if cert.ell_gt == INFINITY else int(cert.ell_gt),
        },
        sort_keys=True,
    )


def certificate_from_json(text: str) -> TreeCertificate:
    data = json.loads(text)
    tree = tuple(sorted((int(u), int(v)) for u, v in data["tree"]))
    witnesses = []
    for key, cyc in sorted(data["witnesses"].items()):
        u, v = (int(x) for x in key.split("-"))
        witnesses.append(((u, v), tuple(int(x) for x in cyc)))
    ell_gt = INFINITY if data["ell_gt"] is None else float(data["ell_gt"])
    return TreeCertificate(tree, tuple(witnesses), data["kind"], ell_gt)
