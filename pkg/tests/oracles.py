"""Independent test oracles: interpolation, cycle enumeration, isomorphism.

These deliberately avoid the library code paths they are used to check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from dpchroma import Graph, Polynomial


def interpolate(values: list[int]) -> Polynomial:
    """The unique polynomial of degree < len(values) with p(i) = values[i].

    Lagrange interpolation over exact rationals; asserts the result has
    integer coefficients.
    """
    n = len(values)
    coeffs = [Fraction(0)] * n
    for i, y in enumerate(values):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] += c * (-j)
                nxt[k + 1] += c
            basis = nxt
            denom *= i - j
        for k, c in enumerate(basis):
            coeffs[k] += Fraction(y) * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return Polynomial(int(c) for c in coeffs)


def all_cycles_through_edge(g: Graph, e: tuple[int, int]) -> list[int]:
    """Lengths of every cycle through e, by exhaustive path search."""
    u, v = min(e), max(e)
    lengths: list[int] = []

    def dfs(x: int, visited: set[int], steps: int) -> None:
        for y in g.adj[x]:
            if y == u and steps >= 2:
                lengths.append(steps + 1)
            if y not in visited and y != u:
                visited.add(y)
                dfs(y, visited, steps + 1)
                visited.discard(y)

    dfs(v, {u, v}, 1)
    return lengths


def has_induced_long_cycle(g: Graph) -> bool:
    """True iff g has an induced (chordless) cycle of length >= 4."""
    n = g.n

    def extend(path: list[int], banned: set[int]) -> bool:
        tail = path[-1]
        start = path[0]
        for y in g.adj[tail]:
            if y == start and len(path) >= 4:
                # chordless: no edge between non-consecutive path vertices
                if all(
                    not g.has_edge(path[i], path[j])
                    for i in range(len(path))
                    for j in range(i + 2, len(path))
                    if not (i == 0 and j == len(path) - 1)
                ):
                    return True
            if y in banned or y <= start:
                continue
            # adjacency to start may become the closing edge; adjacency to
            # the path interior is already a chord
            if any(g.has_edge(y, p) for p in path[1:-1]):
                continue
            if extend(path + [y], banned | {y}):
                return True
        return False

    for s in range(n):
        for t in g.adj[s]:
            if t > s and extend([s, t], {s, t}):
                return True
    return False


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Isomorphism by trying all vertex bijections (tiny graphs only)."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    e2 = g2.edge_set
    for perm in permutations(range(g1.n)):
        if all(
            ((perm[a], perm[b]) if perm[a] < perm[b] else (perm[b], perm[a])) in e2
            for a, b in g1.edges
        ):
            return True
    return False
