"""Exact chromatic polynomials and the polynomial identities around them.

The main computation is deletion-contraction with component and block
factorizations, closed forms at trees/cycles/completes, and an
isomorphism-keyed cache.  An independent edge-subset expansion and a
backtracking coloring counter serve as cross-checking oracles.
"""

from __future__ import annotations

from .graph import (
    Graph,
    GraphError,
    blocks,
    canonical_key,
    components,
    contract_edge,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    is_connected,
)
from .polynomial import Polynomial

CANON_CACHE_LIMIT = 10

_cache: dict[bytes, Polynomial] = {}


def clear_cache() -> None:
    _cache.clear()


def _cache_key(g: Graph) -> bytes:
    # Labeled fallback above the canonicalization limit: correctness never
    # depends on cache hits, only on key inequality for non-isomorphic inputs.
    try:
        return b"C" + canonical_key(g, CANON_CACHE_LIMIT)
    except GraphError:
        return b"L" + repr((g.n, g.edges)).encode("ascii")


def _is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and len(g.edges) == g.n and all(g.degree(v) == 2 for v in range(g.n))


def _pick_edge(g: Graph) -> tuple[int, int]:
    # Contracting an edge with many common neighbors merges the most
    # parallel pairs, which shrinks the recursion fastest.
    best = None
    best_common = -1
    for u, v in g.edges:
        common = len(set(g.adj[u]) & set(g.adj[v]))
        if common > best_common:
            best_common = common
            best = (u, v)
    assert best is not None
    return best


def chromatic_polynomial(g: Graph) -> Polynomial:
    """The exact chromatic polynomial P(G, x)."""
    if not g.edges:
        return Polynomial.monomial(g.n)
    key = _cache_key(g)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    comps = components(g)
    if len(comps) > 1:
        result = Polynomial.one()
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            result = result * chromatic_polynomial(sub)
    elif len(g.edges) == g.n - 1:
        result = Polynomial.x() * (Polynomial((-1, 1)) ** (g.n - 1))
    elif _is_complete(g):
        result = Polynomial.falling_factorial(g.n)
    elif _is_cycle(g):
        xm1 = Polynomial((-1, 1))
        result = xm1 ** g.n + (xm1 if g.n % 2 == 0 else -xm1)
    else:
        decomp = blocks(g)
        if len(decomp.blocks) >= 2:
            prod = Polynomial.one()
            for blk in decomp.blocks:
                sub, _ = induced_subgraph(g, blk)
                prod = prod * chromatic_polynomial(sub)
            result = prod.divide_by_x_power(len(decomp.blocks) - 1)
        else:
            e = _pick_edge(g)
            result = chromatic_polynomial(delete_edge(g, e)) - chromatic_polynomial(
                contract_edge(g, e)
            )
    _cache[key] = result
    return result


def whitney_polynomial(g: Graph, max_edges: int = 24) -> Polynomial:
    """P(G, x) by signed summation over all edge subsets.

    Independent of the deletion-contraction path: sums (-1)^|A| x^c(A) over
    subsets A of E(G), where c(A) counts components of the spanning subgraph.
    """
    ne = len(g.edges)
    if ne > max_edges:
        raise ValueError(f"edge count {ne} exceeds the subset-expansion limit {max_edges}")
    n = g.n
    acc = [0] * (n + 1)
    parent = list(range(n))
    size = [1] * n
    trail: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    edges = g.edges

    def rec(i: int, ncomp: int, sign: int) -> None:
        if i == ne:
            acc[ncomp] += sign
            return
        rec(i + 1, ncomp, sign)
        a, b = edges[i]
        ra, rb = find(a), find(b)
        if ra == rb:
            rec(i + 1, ncomp, -sign)
        else:
            if size[ra] < size[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            size[ra] += size[rb]
            trail.append(rb)
            rec(i + 1, ncomp - 1, -sign)
            rb2 = trail.pop()
            ra2 = parent[rb2]
            parent[rb2] = rb2
            size[ra2] -= size[rb2]

    rec(0, n, 1)
    return Polynomial(acc)


def count_proper_colorings(g: Graph, m: int) -> int:
    """Backtracking count of proper colorings with m colors, exactly."""
    if m < 0:
        raise ValueError("negative color count")
    if g.n == 0:
        return 1
    if m == 0:
        return 0
    order: list[int] = []
    for comp in components(g):
        seen = {comp[0]}
        queue = [comp[0]]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [
        [pos[w] for w in g.adj[v] if pos[w] < pos[v]]
        for v in order
    ]
    n = g.n
    colors = [0] * n

    def count(i: int) -> int:
        if i == n:
            return 1
        total = 0
        banned = {colors[j] for j in earlier[i]}
        for c in range(m):
            if c not in banned:
                colors[i] = c
                total += count(i + 1)
        return total

    return count(0)


def chromatic_number(g: Graph) -> int:
    """Smallest m with P(G, m) > 0."""
    p = chromatic_polynomial(g)
    k = 0
    while p(k) == 0:
        k += 1
    return k


def simplicial_peel_identity(g: Graph, u: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of P(G, x) = (x - d(u)) P(G - u, x) for simplicial u."""
    if not (0 <= u < g.n):
        raise GraphError(f"vertex {u} not in graph")
    nb = g.adj[u]
    for i, a in enumerate(nb):
        for b in nb[i + 1:]:
            if not g.has_edge(a, b):
                raise GraphError(f"vertex {u} is not simplicial: {a} and {b} are not adjacent")
    minus_u, _ = delete_vertex(g, u)
    left = chromatic_polynomial(g)
    right = Polynomial((-g.degree(u), 1)) * chromatic_polynomial(minus_u)
    return left, right


def zykov_identity_check(
    g1: Graph,
    g2: Graph,
    clique1: list[int],
    clique2: list[int],
) -> tuple[Polynomial, Polynomial, bool]:
    """Cross-multiplied clique-gluing identity.

    For G the gluing of g1 and g2 along k-cliques, returns
    (P(G, x) * x(x-1)...(x-k+1), P(g1, x) * P(g2, x), equal_flag).
    Division never happens, so the check stays in the integer ring.
    """
    from .constructions import clique_sum

    k = len(clique1)
    if k == 0:
        raise GraphError("gluing along an empty clique is not defined")
    glued = clique_sum(g1, g2, clique1, clique2)
    lhs = chromatic_polynomial(glued) * Polynomial.falling_factorial(k)
    rhs = chromatic_polynomial(g1) * chromatic_polynomial(g2)
    return lhs, rhs, lhs == rhs


def block_factorization_check(g: Graph) -> tuple[Polynomial, Polynomial, bool]:
    """Cross-multiplied block-product identity for a connected graph.

    Returns (P(G,x) * x^(r-1), product of block polynomials, equal_flag)
    where r is the number of blocks.
    """
    if not is_connected(g):
        raise GraphError("block factorization requires a connected graph")
    decomp = blocks(g)
    r = len(decomp.blocks)
    prod = Polynomial.one()
    for blk in decomp.blocks:
        sub, _ = induced_subgraph(g, blk)
        prod = prod * chromatic_polynomial(sub)
    lhs = chromatic_polynomial(g).shifted(r - 1)
    return lhs, prod, lhs == prod
