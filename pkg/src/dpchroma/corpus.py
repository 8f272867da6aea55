"""Deterministic corpora for sweeps and randomized checks.

Small-graph enumeration works on edge bitmasks of K_n: each labeled graph on
n <= 7 vertices is an integer, canonical forms are the minimum over all
vertex permutations (vectorized with numpy), and one representative per
isomorphism class is kept.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .cover import Cover, build_cover
from .graph import Graph, GraphError, is_connected

_MAX_ENUM_N = 6


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> tuple[int, ...]:
    """Sorted canonical edge masks, one per isomorphism class of n-vertex graphs."""
    if n < 0 or n > _MAX_ENUM_N:
        raise GraphError(f"exhaustive enumeration supports 0..{_MAX_ENUM_N} vertices")
    if n <= 1:
        return (0,)
    pairs = list(combinations(range(n), 2))
    bits = len(pairs)
    pair_idx = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << bits, dtype=np.int64)
    canon = masks.copy()
    lo_bits = min(bits, 11)
    hi_bits = bits - lo_bits
    lo_values = np.arange(1 << lo_bits, dtype=np.int64)
    hi_values = np.arange(1 << hi_bits, dtype=np.int64)
    lo_part = masks & ((1 << lo_bits) - 1)
    hi_part = masks >> lo_bits
    for perm in permutations(range(n)):
        target = [0] * bits
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            target[k] = pair_idx[(a, b) if a < b else (b, a)]
        lo_table = np.zeros(1 << lo_bits, dtype=np.int64)
        for b in range(lo_bits):
            lo_table[(lo_values >> b) & 1 == 1] |= np.int64(1) << target[b]
        if hi_bits:
            hi_table = np.zeros(1 << hi_bits, dtype=np.int64)
            for b in range(hi_bits):
                hi_table[(hi_values >> b) & 1 == 1] |= np.int64(1) << target[lo_bits + b]
            permuted = lo_table[lo_part] | hi_table[hi_part]
        else:
            permuted = lo_table[lo_part]
        np.minimum(canon, permuted, out=canon)
    return tuple(int(x) for x in sorted(set(np.unique(canon).tolist())))


def _mask_to_graph(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
    return Graph(n, tuple(edges))


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on exactly n vertices."""
    return [_mask_to_graph(n, mask) for mask in _canonical_masks(n)]


def connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected n-vertex graphs."""
    return [g for g in all_graphs(n) if g.n >= 1 and is_connected(g)]


def connected_graphs_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(connected_graphs(k))
    return out


def cyclomatic_number(g: Graph) -> int:
    from .graph import components

    return len(g.edges) - g.n + len(components(g))


def small_connected_corpus(max_n: int, max_cyclomatic: int) -> list[Graph]:
    """Connected graphs with at most max_n vertices and bounded cyclomatic number."""
    return [
        g
        for g in connected_graphs_up_to(max_n)
        if len(g.edges) - g.n + 1 <= max_cyclomatic
    ]


def random_chordal(rng: random.Random, n: int, max_extra: int = 3) -> Graph:
    """A random connected chordal graph built by simplicial attachments.

    Each new vertex attaches to a random clique of size 1..3 of the current
    graph; ``max_extra`` bounds the cyclomatic number.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    edges: list[tuple[int, int]] = []
    triangles: list[tuple[int, int, int]] = []
    extra = 0
    for v in range(1, n):
        choices = [1]
        if edges and extra + 1 <= max_extra:
            choices.append(2)
        if triangles and extra + 2 <= max_extra:
            choices.append(3)
        size = rng.choice(choices)
        if size == 1:
            anchor: Sequence[int] = (rng.randrange(v),)
        elif size == 2:
            anchor = rng.choice(edges)
        else:
            anchor = rng.choice(triangles)
        extra += size - 1
        for a in anchor:
            edges.append((a, v))
        if size >= 2:
            triangles.extend((a, b, v) for a, b in combinations(sorted(anchor), 2))
    return Graph(n, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))


def random_cover(rng: random.Random, g: Graph, m: int) -> Cover:
    """A random cover: independent random partial injections per edge."""
    matchings = {}
    for e in g.edges:
        k = rng.randint(0, m)
        dom = rng.sample(range(m), k)
        img = rng.sample(range(m), k)
        matchings[e] = list(zip(dom, img))
    return build_cover(g, m, matchings)
