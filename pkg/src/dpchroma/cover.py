"""m-fold covers, exact transversal counting, and the DP color function.

A cover assigns to every edge (oriented low id -> high id) a partial
injection of the fiber indices 0..m-1; a transversal picks one index per
vertex avoiding every matched pair.  The DP color function is computed
exactly by minimizing the transversal count over gauge-normalized covers:
full matchings everywhere, identity matchings on a fixed spanning tree, and
arbitrary permutations on the co-tree edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

from .graph import Edge, Graph, GraphError, components, induced_subgraph, is_connected

__all__ = [
    "BudgetExceededError",
    "Cover",
    "GaugeAssignment",
    "build_cover",
    "h0_cover",
    "twist_set",
    "count_transversals",
    "count_transversals_ie",
    "dp_color_function",
    "dp_color_function_components",
    "is_h0_isomorphic",
    "transversal_is_valid",
    "extend_partial",
    "delete_cover_edge",
    "dp_chromatic_number",
    "brute_force_full_matching_minimum",
    "brute_force_arbitrary_cover_minimum",
    "cover_to_json",
    "cover_from_json",
    "gauge_to_json",
    "gauge_from_json",
]


class BudgetExceededError(RuntimeError):
    """The requested search would exceed its step budget; no value is returned."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"search needs {required} gauge assignments, budget is {budget}")
        self.required = required
        self.budget = budget


class Cover:
    """An m-fold cover in gauge form: per-edge partial injections on 0..m-1.

    ``matchings`` maps each edge (u, v) with u < v to a dict ``{i: j}``
    recording that fiber index i at u is matched to index j at v.
    """

    __slots__ = ("graph", "m", "matchings")

    def __init__(self, graph: Graph, m: int, matchings: Mapping[Edge, Mapping[int, int]]):
        self.graph = graph
        self.m = m
        self.matchings = {e: dict(fw) for e, fw in matchings.items()}

    def forward(self, e: Edge) -> dict[int, int]:
        return self.matchings[e]

    def inverse(self, e: Edge) -> dict[int, int]:
        return {j: i for i, j in self.matchings[e].items()}

    def __repr__(self) -> str:
        return f"Cover(m={self.m}, edges={len(self.matchings)})"


def build_cover(
    graph: Graph,
    m: int,
    matchings: Mapping[tuple[int, int], Iterable[tuple[int, int]]],
) -> Cover:
    """Validate pair lists per edge and build a :class:`Cover`.

    Edges of the graph without an entry get an empty matching.
    """
    if m < 1:
        raise GraphError(f"fold size must be positive, got {m}")
    table: dict[Edge, dict[int, int]] = {e: {} for e in graph.edges}
    for raw_edge, pairs in matchings.items():
        u, v = raw_edge
        e = (u, v) if u < v else (v, u)
        if e not in table:
            raise GraphError(f"edge {raw_edge} not in graph")
        fw: dict[int, int] = {}
        used: set[int] = set()
        for i, j in pairs:
            if not (0 <= i < m and 0 <= j < m):
                raise GraphError(f"pair ({i}, {j}) outside fiber range 0..{m - 1}")
            if i in fw or j in used:
                raise GraphError(f"matching on edge {e} is not a partial injection")
            fw[i] = j
            used.add(j)
        table[e] = fw
    return Cover(graph, m, table)


def h0_cover(graph: Graph, m: int) -> Cover:
    """The straight cover: full identity matchings on every edge."""
    if m < 1:
        raise GraphError(f"fold size must be positive, got {m}")
    ident = {i: i for i in range(m)}
    return Cover(graph, m, {e: dict(ident) for e in graph.edges})


def twist_set(cover: Cover, e: tuple[int, int]) -> list[tuple[int, int]]:
    """The non-identity pairs of an edge's matching."""
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in cover.matchings:
        raise GraphError(f"edge {e} not in graph")
    return sorted((i, j) for i, j in cover.matchings[e].items() if i != j)


# ---------------------------------------------------------------------------
# Transversal counting


def _component_plans(g: Graph) -> list[list[tuple[int, list[tuple[int, Edge, bool]]]]]:
    """Per component: BFS-ordered vertices with their earlier-neighbor hooks.

    Each entry is (vertex, [(earlier_position_in_component, edge, forward)])
    where ``forward`` says the earlier vertex is the low end of the edge.
    """
    plans = []
    for comp in components(g):
        order: list[int] = []
        pos: dict[int, int] = {}
        seen = {comp[0]}
        queue = [comp[0]]
        while queue:
            x = queue.pop(0)
            pos[x] = len(order)
            order.append(x)
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        plan = []
        for v in order:
            hooks = []
            for w in g.adj[v]:
                if pos[w] < pos[v]:
                    e = (w, v) if w < v else (v, w)
                    hooks.append((pos[w], e, w == e[0]))
            plan.append((v, hooks))
        plans.append(plan)
    return plans


def _count_component(
    plan: list[tuple[int, list[tuple[int, Edge, bool]]]],
    m: int,
    fwd: Mapping[Edge, Sequence[int]],
    inv: Mapping[Edge, Sequence[int]],
) -> int:
    """Count transversals of one component by backtracking.

    ``fwd[e][i]``/``inv[e][j]`` give the matched partner index or -1.
    """
    size = len(plan)
    vals = [0] * size
    hook_tables: list[list[tuple[int, Sequence[int]]]] = []
    for _, hooks in plan:
        row = []
        for p, e, forward in hooks:
            row.append((p, fwd[e] if forward else inv[e]))
        hook_tables.append(row)

    def rec(i: int) -> int:
        if i == size:
            return 1
        total = 0
        row = hook_tables[i]
        for c in range(m):
            ok = True
            for p, table in row:
                if table[vals[p]] == c:
                    ok = False
                    break
            if ok:
                vals[i] = c
                total += rec(i + 1)
        return total

    return rec(0)


def _tables(cover: Cover) -> tuple[dict[Edge, list[int]], dict[Edge, list[int]]]:
    fwd: dict[Edge, list[int]] = {}
    inv: dict[Edge, list[int]] = {}
    m = cover.m
    for e, mapping in cover.matchings.items():
        f = [-1] * m
        b = [-1] * m
        for i, j in mapping.items():
            f[i] = j
            b[j] = i
        fwd[e] = f
        inv[e] = b
    return fwd, inv


def count_transversals(cover: Cover) -> int:
    """Exact number of transversals, by connectivity-aware backtracking."""
    g = cover.graph
    if g.n == 0:
        return 1
    fwd, inv = _tables(cover)
    total = 1
    for plan in _component_plans(g):
        total *= _count_component(plan, cover.m, fwd, inv)
        if total == 0:
            return 0
    return total


def count_transversals_ie(cover: Cover, max_edges: int = 20) -> int:
    """Transversal count by inclusion-exclusion over edge subsets.

    For each subset A the number of selections realizing all of A factors
    over the components of the spanning subgraph <A>; each factor is counted
    by propagating a root fiber index through the component's matchings.
    Serves as an independent oracle for :func:`count_transversals`.
    """
    g = cover.graph
    ne = len(g.edges)
    if ne > max_edges:
        raise ValueError(f"edge count {ne} exceeds the inclusion-exclusion limit {max_edges}")
    n = g.n
    m = cover.m
    fwd, inv = _tables(cover)
    edges = list(g.edges)
    total = 0
    for mask in range(1 << ne):
        subset = [edges[k] for k in range(ne) if mask >> k & 1]
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        comp_edges: dict[int, list[Edge]] = {}
        for e in subset:
            comp_edges.setdefault(find(e[0]), []).append(e)
        roots = {find(v) for v in range(n)}
        term = 1
        for r in roots:
            grp = comp_edges.get(r, [])
            if not grp:
                term *= m
                continue
            term *= _walk_count(grp, m, fwd, inv)
            if term == 0:
                break
        total += -term if bin(mask).count("1") % 2 else term
    return total


def _walk_count(
    comp_edges: list[Edge],
    m: int,
    fwd: Mapping[Edge, Sequence[int]],
    inv: Mapping[Edge, Sequence[int]],
) -> int:
    """Number of consistent index assignments on one connected edge group."""
    adj: dict[int, list[tuple[int, Edge]]] = {}
    for e in comp_edges:
        adj.setdefault(e[0], []).append((e[1], e))
        adj.setdefault(e[1], []).append((e[0], e))
    root = min(adj)
    tree: list[tuple[int, int, Edge]] = []
    seen = {root}
    queue = [root]
    tree_set: set[Edge] = set()
    while queue:
        x = queue.pop(0)
        for y, e in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                tree.append((x, y, e))
                tree_set.add(e)
                queue.append(y)
    rest = [e for e in comp_edges if e not in tree_set]
    count = 0
    for j in range(m):
        idx = {root: j}
        alive = True
        for x, y, e in tree:
            table = fwd[e] if x == e[0] else inv[e]
            nxt = table[idx[x]]
            if nxt == -1:
                alive = False
                break
            idx[y] = nxt
        if not alive:
            continue
        if all(fwd[e][idx[e[0]]] == idx[e[1]] for e in rest):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Gauge assignments and the DP color function


@dataclass(frozen=True)
class GaugeAssignment:
    """A gauge-normalized full cover: identity on tree edges, permutations off it."""

    tree: tuple[Edge, ...]
    cotree_perms: tuple[tuple[Edge, tuple[int, ...]], ...]

    def perm_for(self, e: Edge) -> tuple[int, ...]:
        for edge, perm in self.cotree_perms:
            if edge == e:
                return perm
        raise KeyError(e)

    def expand(self, graph: Graph, m: int) -> Cover:
        ident = {i: i for i in range(m)}
        table: dict[Edge, dict[int, int]] = {}
        for e in self.tree:
            table[e] = dict(ident)
        for e, perm in self.cotree_perms:
            table[e] = {i: perm[i] for i in range(m)}
        if set(table) != set(graph.edges):
            raise GraphError("gauge assignment does not match the graph's edge set")
        return Cover(graph, m, table)


def _lex_spanning_tree(g: Graph) -> list[Edge]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.append((a, b))
    return tree


def _conjugacy_representatives(m: int) -> list[tuple[int, ...]]:
    """Lexicographically least permutation of each cycle type of S_m."""

    def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
        seen = [False] * m
        lens = []
        for s in range(m):
            if seen[s]:
                continue
            ln = 0
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                ln += 1
            lens.append(ln)
        return tuple(sorted(lens))

    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    for perm in permutations(range(m)):
        t = cycle_type(perm)
        if t not in reps:
            reps[t] = perm
    return [reps[t] for t in sorted(reps)]


def dp_color_function(
    g: Graph, m: int, budget: int = 10**6
) -> tuple[int, list[GaugeAssignment]]:
    """Exact DP color function of a connected graph, with witnesses.

    Minimizes the transversal count over all gauge assignments: spanning-tree
    matchings are identities, each co-tree edge carries a full permutation,
    and the first co-tree edge ranges over conjugacy-class representatives
    only (simultaneous fiber relabeling conjugates every co-tree permutation,
    so one representative per class suffices).  Returns the minimum together
    with every minimizing assignment in the reduced enumeration.

    Raises :class:`BudgetExceededError` when (m!)^cyclomatic exceeds
    ``budget``; a refusal is never a wrong value.
    """
    if m < 1:
        raise GraphError(f"fold size must be positive, got {m}")
    if not is_connected(g):
        raise GraphError("dp_color_function requires a connected graph; "
                         "multiply over components instead")
    tree = _lex_spanning_tree(g)
    cotree = [e for e in g.edges if e not in set(tree)]
    c = len(cotree)
    raw = factorial(m) ** c
    if raw > budget:
        raise BudgetExceededError(raw, budget)

    plans = _component_plans(g)
    ident = list(range(m))
    fwd: dict[Edge, list[int]] = {e: ident for e in tree}
    inv: dict[Edge, list[int]] = {e: ident for e in tree}

    if c == 0:
        value = 1
        for plan in plans:
            value *= _count_component(plan, m, fwd, inv)
        return value, [GaugeAssignment(tuple(tree), ())]

    perms = list(permutations(range(m)))
    inverses = {p: tuple(_invert(p)) for p in perms}
    reps = _conjugacy_representatives(m)

    axes: list[list[tuple[int, ...]]] = [list(reps)] + [perms] * (c - 1)
    best: Optional[int] = None
    witnesses: list[GaugeAssignment] = []
    for combo in product(*axes):
        for e, perm in zip(cotree, combo):
            fwd[e] = list(perm)
            inv[e] = list(inverses[perm])
        value = 1
        for plan in plans:
            value *= _count_component(plan, m, fwd, inv)
        if best is None or value < best:
            best = value
            witnesses = [_gauge(tree, cotree, combo)]
        elif value == best:
            witnesses.append(_gauge(tree, cotree, combo))
    assert best is not None
    witnesses.sort(key=lambda w: w.cotree_perms)
    return best, witnesses


def _invert(perm: Sequence[int]) -> list[int]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return out


def _gauge(tree: list[Edge], cotree: list[Edge], combo: Sequence[tuple[int, ...]]) -> GaugeAssignment:
    return GaugeAssignment(
        tuple(tree),
        tuple((e, tuple(p)) for e, p in zip(cotree, combo)),
    )


def dp_color_function_components(g: Graph, m: int, budget: int = 10**6) -> int:
    """DP color function of an arbitrary graph: product over components."""
    total = 1
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        value, _ = dp_color_function(sub, m, budget)
        total *= value
    return total


def is_h0_isomorphic(cover: Cover) -> bool:
    """True iff per-fiber relabelings turn every matching into the identity.

    Equivalent to: all matchings are full and the composed permutation
    around every fundamental cycle of a spanning forest is the identity.
    """
    g = cover.graph
    m = cover.m
    if any(len(fw) < m for fw in cover.matchings.values()):
        return False
    fwd, inv = _tables(cover)
    label: dict[int, list[int]] = {}
    for comp in components(g):
        comp_set = set(comp)
        root = comp[0]
        label[root] = list(range(m))
        seen = {root}
        queue = [root]
        tree_set: set[Edge] = set()
        while queue:
            x = queue.pop(0)
            for y in g.adj[x]:
                if y in seen:
                    continue
                e = (x, y) if x < y else (y, x)
                table = fwd[e] if x == e[0] else inv[e]
                label[y] = [table[label[x][i]] for i in range(m)]
                tree_set.add(e)
                seen.add(y)
                queue.append(y)
        for e in g.edges:
            u, v = e
            if u not in comp_set or e in tree_set:
                continue
            if any(fwd[e][label[u][i]] != label[v][i] for i in range(m)):
                return False
    return True


def transversal_is_valid(cover: Cover, choice: Mapping[int, int]) -> bool:
    """Check the independence condition of a full or partial transversal."""
    m = cover.m
    for v, i in choice.items():
        if not (0 <= v < cover.graph.n and 0 <= i < m):
            return False
    for (u, v), fw in cover.matchings.items():
        if u in choice and v in choice:
            if fw.get(choice[u]) == choice[v]:
                return False
    return True


def extend_partial(cover: Cover, partial: Mapping[int, int]) -> Optional[dict[int, int]]:
    """Extend an independent partial transversal to a full one, if possible.

    Returns the lexicographically first completion (vertices ascending,
    indices ascending) or ``None``.  Raises on a dependent input.
    """
    if not transversal_is_valid(cover, partial):
        raise GraphError("partial transversal violates independence")
    g = cover.graph
    m = cover.m
    fwd, inv = _tables(cover)
    free = [v for v in range(g.n) if v not in partial]
    choice = dict(partial)

    def ok(v: int, c: int) -> bool:
        for w in g.adj[v]:
            if w not in choice:
                continue
            e = (v, w) if v < w else (w, v)
            # the matched partner of w's index is banned for v
            banned = fwd[e][choice[w]] if w == e[0] else inv[e][choice[w]]
            if banned == c:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(free):
            return True
        v = free[i]
        for c in range(m):
            if ok(v, c):
                choice[v] = c
                if rec(i + 1):
                    return True
                del choice[v]
        return False

    return choice if rec(0) else None


def delete_cover_edge(cover: Cover, e: tuple[int, int], pair: tuple[int, int]) -> Cover:
    """Remove one matched pair from an edge's matching."""
    u, v = e
    e = (u, v) if u < v else (v, u)
    if e not in cover.matchings:
        raise GraphError(f"edge {e} not in graph")
    i, j = pair
    fw = cover.matchings[e]
    if fw.get(i) != j:
        raise GraphError(f"pair ({i}, {j}) not present on edge {e}")
    table = {edge: dict(mp) for edge, mp in cover.matchings.items()}
    del table[e][i]
    return Cover(cover.graph, cover.m, table)


def dp_chromatic_number(g: Graph, budget: int = 10**6) -> int:
    """Smallest m with a transversal under every m-fold cover."""
    if g.n == 0:
        return 0
    worst = 1
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        m = 1
        while True:
            value, _ = dp_color_function(sub, m, budget)
            if value > 0:
                break
            m += 1
        worst = max(worst, m)
    return worst


# ---------------------------------------------------------------------------
# Small-instance brute-force oracles


def brute_force_full_matching_minimum(g: Graph, m: int, limit: int = 10**7) -> int:
    """Minimum transversal count over full-matching covers with arbitrary
    permutations on every edge (no gauge fixing).  Small instances only."""
    ne = len(g.edges)
    space = factorial(m) ** ne
    if space > limit:
        raise BudgetExceededError(space, limit)
    perms = list(permutations(range(m)))
    inverses = [list(_invert(p)) for p in perms]
    plans = _component_plans(g)
    edges = list(g.edges)
    best: Optional[int] = None
    fwd: dict[Edge, list[int]] = {}
    inv: dict[Edge, list[int]] = {}
    for combo in product(range(len(perms)), repeat=ne):
        for e, k in zip(edges, combo):
            fwd[e] = list(perms[k])
            inv[e] = inverses[k]
        value = 1
        for plan in plans:
            value *= _count_component(plan, m, fwd, inv)
        if best is None or value < best:
            best = value
        if best == 0:
            return 0
    assert best is not None
    return best


def _partial_injections(m: int) -> list[dict[int, int]]:
    out: list[dict[int, int]] = []

    def rec(i: int, used: set[int], cur: dict[int, int]) -> None:
        if i == m:
            out.append(dict(cur))
            return
        rec(i + 1, used, cur)
        for j in range(m):
            if j not in used:
                cur[i] = j
                used.add(j)
                rec(i + 1, used, cur)
                used.discard(j)
                del cur[i]

    rec(0, set(), {})
    return out


def brute_force_arbitrary_cover_minimum(g: Graph, m: int, limit: int = 10**7) -> int:
    """Minimum transversal count over ALL covers, partial matchings included.

    Exhausts every combination of partial injections per edge; tiny
    instances only.  Exists to validate that the full-matching search space
    already attains the minimum.
    """
    injections = _partial_injections(m)
    ne = len(g.edges)
    space = len(injections) ** ne
    if space > limit:
        raise BudgetExceededError(space, limit)
    edges = list(g.edges)
    best: Optional[int] = None
    for combo in product(range(len(injections)), repeat=ne):
        cover = Cover(g, m, {e: injections[k] for e, k in zip(edges, combo)})
        value = count_transversals(cover)
        if best is None or value < best:
            best = value
        if best == 0:
            return 0
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Serialization (1-based fiber indices on the wire)


def cover_to_json(cover: Cover) -> str:
    table = {
        f"{u}-{v}": sorted([i + 1, j + 1] for i, j in cover.matchings[(u, v)].items())
        for u, v in cover.graph.edges
    }
    return json.dumps({"m": cover.m, "matchings": table}, sort_keys=True)


def cover_from_json(graph: Graph, text: str) -> Cover:
    data = json.loads(text)
    m = int(data["m"])
    matchings: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for key, pairs in data.get("matchings", {}).items():
        u, v = (int(x) for x in key.split("-"))
        matchings[(u, v)] = [(int(i) - 1, int(j) - 1) for i, j in pairs]
    return build_cover(graph, m, matchings)


def gauge_to_json(gauge: GaugeAssignment) -> str:
    return json.dumps(
        {
            "tree": [[u, v] for u, v in gauge.tree],
            "perms": {
                f"{u}-{v}": [p + 1 for p in perm]
                for (u, v), perm in gauge.cotree_perms
            },
        },
        sort_keys=True,
    )


def gauge_from_json(text: str) -> GaugeAssignment:
    data = json.loads(text)
    tree = tuple((int(u), int(v)) for u, v in data["tree"])
    perms = []
    for key, perm in sorted(data.get("perms", {}).items()):
        u, v = (int(x) for x in key.split("-"))
        perms.append(((u, v), tuple(int(p) - 1 for p in perm)))
    return GaugeAssignment(tree, tuple(perms))
