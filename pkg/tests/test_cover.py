import json
import random

import pytest

from dpchroma import (
    BudgetExceededError,
    GraphError,
    build_cover,
    build_graph,
    chromatic_polynomial,
    clique_sum,
    complete,
    count_proper_colorings,
    count_transversals,
    count_transversals_ie,
    cycle,
    delete_cover_edge,
    delete_vertex,
    dp_chromatic_number,
    dp_color_function,
    dp_color_function_components,
    disjoint_union,
    empty_graph,
    extend_partial,
    h0_cover,
    is_h0_isomorphic,
    path,
    phi_expand,
    simplicial_vertices,
    star,
    theta,
    twist_set,
)
from dpchroma.cover import (
    GaugeAssignment,
    brute_force_arbitrary_cover_minimum,
    brute_force_full_matching_minimum,
    cover_from_json,
    cover_to_json,
    gauge_from_json,
    gauge_to_json,
)
from dpchroma.corpus import connected_graphs_up_to, cyclomatic_number, random_cover


def _single_twist_c4(m, perm):
    table = {e: [(i, i) for i in range(m)] for e in cycle(4).edges}
    table[(2, 3)] = [(i, perm[i]) for i in range(m)]
    return build_cover(cycle(4), m, table)


def test_h0_cover_attains_chromatic_counts():
    for g in (complete(3), cycle(4), cycle(5), star(4), theta([1, 2, 2])):
        for m in (1, 2, 3, 4):
            assert count_transversals(h0_cover(g, m)) == count_proper_colorings(g, m)
    assert count_transversals(h0_cover(empty_graph(3), 2)) == 8
    with pytest.raises(GraphError):
        h0_cover(cycle(3), 0)


def test_count_transversal_examples():
    assert count_transversals(h0_cover(cycle(3), 3)) == 6
    swapped = _single_twist_c4(2, (1, 0))
    assert count_transversals(swapped) == 0
    assert count_transversals(h0_cover(empty_graph(1), 5)) == 5


def test_twist_set():
    cov = _single_twist_c4(2, (1, 0))
    assert twist_set(cov, (2, 3)) == [(0, 1), (1, 0)]
    assert twist_set(cov, (0, 1)) == []


def test_ie_matches_backtracking_on_random_covers():
    rng = random.Random(20240)
    pool = [g for g in connected_graphs_up_to(5) if len(g.edges) <= 9]
    for _ in range(60):
        g = rng.choice(pool)
        m = rng.randint(1, 3)
        cov = random_cover(rng, g, m)
        assert count_transversals(cov) == count_transversals_ie(cov)


def test_ie_empty_subset_term_and_limits():
    cov = h0_cover(empty_graph(4), 3)
    assert count_transversals_ie(cov) == 81
    with pytest.raises(ValueError):
        count_transversals_ie(h0_cover(complete(7), 2))


def test_dp_color_function_cycles():
    v, wit = dp_color_function(cycle(4), 2)
    assert v == 0
    v3, wit3 = dp_color_function(cycle(4), 3)
    # exhaustive gauge search; cross-checked below against covers with no
    # gauge fixing and against covers allowing partial matchings
    assert v3 == 15
    assert chromatic_polynomial(cycle(4))(3) == 18
    v5, wit5 = dp_color_function(cycle(3), 3)
    assert v5 == 6
    assert all(is_h0_isomorphic(w.expand(cycle(3), 3)) for w in wit5)


def test_dp_gauge_counts_per_class():
    # single co-tree edge of a triangle: identity 6, transposition 8, 3-cycle 9
    tri = cycle(3)
    tree = ((0, 1), (0, 2))
    for perm, expect in (((0, 1, 2), 6), ((1, 0, 2), 8), ((1, 2, 0), 9)):
        gauge = GaugeAssignment(tree, (((1, 2), perm),))
        assert count_transversals(gauge.expand(tri, 3)) == expect


def test_dp_matches_unrestricted_full_matching_search():
    for g in (cycle(3), cycle(4), path(3), theta([1, 2, 2])):
        for m in (1, 2, 3):
            gauge_min, _ = dp_color_function(g, m)
            assert gauge_min == brute_force_full_matching_minimum(g, m)


def test_dp_matches_minimum_over_partial_matchings_too():
    # tiny instances: the unrestricted space includes partial matchings
    for g, m in ((cycle(3), 2), (path(3), 2), (cycle(4), 2)):
        gauge_min, _ = dp_color_function(g, m)
        assert gauge_min == brute_force_arbitrary_cover_minimum(g, m)


def test_dp_dominated_by_chromatic_polynomial():
    for g in connected_graphs_up_to(4):
        p = chromatic_polynomial(g)
        for m in (1, 2, 3):
            v, _ = dp_color_function(g, m)
            assert v <= p(m)


def test_dp_requires_connected_and_budget():
    with pytest.raises(GraphError):
        dp_color_function(disjoint_union(path(2), path(2)), 2)
    with pytest.raises(BudgetExceededError):
        dp_color_function(cycle(4), 3, budget=5)
    assert dp_color_function_components(disjoint_union(cycle(4), complete(3)), 3) == 15 * 6


def test_witnesses_deterministic_and_minimal():
    v, wit = dp_color_function(cycle(4), 3)
    assert len(wit) >= 1
    for w in wit:
        assert count_transversals(w.expand(cycle(4), 3)) == v
    again = dp_color_function(cycle(4), 3)
    assert again[1] == wit


def test_is_h0_isomorphic():
    assert is_h0_isomorphic(h0_cover(cycle(4), 3))
    # arbitrary full matchings on a tree graph relabel away
    tree_cover = build_cover(
        path(3), 2, {(0, 1): [(0, 1), (1, 0)], (1, 2): [(0, 0), (1, 1)]}
    )
    assert is_h0_isomorphic(tree_cover)
    assert not is_h0_isomorphic(_single_twist_c4(2, (1, 0)))
    partial = build_cover(cycle(3), 2, {(0, 1): [(0, 0)], (0, 2): [(0, 0), (1, 1)], (1, 2): [(0, 0), (1, 1)]})
    assert not is_h0_isomorphic(partial)


def test_extend_partial():
    cov = h0_cover(cycle(4), 4)
    full = extend_partial(cov, {0: 0, 2: 0})
    assert full is not None and full[0] == 0 and full[2] == 0
    assert extend_partial(h0_cover(cycle(3), 2), {}) is None
    assert extend_partial(h0_cover(cycle(5), 3), {}) is not None
    with pytest.raises(GraphError):
        extend_partial(h0_cover(path(2), 2), {0: 0, 1: 0})


def test_delete_cover_edge_monotone():
    base = h0_cover(cycle(3), 3)
    weakened = delete_cover_edge(base, (0, 1), (0, 0))
    assert count_transversals(weakened) == 8 > 6
    with pytest.raises(GraphError):
        delete_cover_edge(base, (0, 1), (0, 1))
    rng = random.Random(5)
    for _ in range(20):
        g = rng.choice(connected_graphs_up_to(4))
        m = rng.randint(1, 3)
        cov = random_cover(rng, g, m)
        pairs = [(e, p) for e in g.edges for p in cov.matchings[e].items()]
        if not pairs:
            continue
        e, pair = rng.choice(pairs)
        assert count_transversals(delete_cover_edge(cov, e, pair)) >= count_transversals(cov)


def test_deletion_strict_when_m_at_least_n():
    # removing any pair strictly increases the count once fibers are large
    for g in (cycle(3), path(3), cycle(4)):
        m = g.n + 1
        base = h0_cover(g, m)
        for e in g.edges:
            weakened = delete_cover_edge(base, e, (0, 0))
            assert count_transversals(weakened) > count_transversals(base)


def test_strictness_of_peel_bound_under_weak_or_tangled_covers():
    # once m >= n, a missing pair at a vertex, or a non-clique neighborhood
    # across its fibers, forces a strict gap over (m - d(u)) * count(G - u)
    for g, u in ((path(3), 1), (complete(3), 2), (cycle(4), 0)):
        m = g.n
        minus_u, relabel = delete_vertex(g, u)

        def reduced_count(cov):
            table = {}
            for (a, b), fw in cov.matchings.items():
                if u in (a, b):
                    continue
                table[(relabel[a], relabel[b])] = list(fw.items())
            return count_transversals(build_cover(minus_u, m, table))

        # condition (i): drop one pair on an edge at u
        edge_at_u = next(e for e in g.edges if u in e)
        weak = delete_cover_edge(h0_cover(g, m), edge_at_u, (0, 0))
        assert count_transversals(weak) > (m - g.degree(u)) * reduced_count(weak)
        # condition (ii): twist one edge at u so the fiber neighborhoods tangle
        table = {e: [(i, i) for i in range(m)] for e in g.edges}
        perm = list(range(m))
        perm[0], perm[1] = perm[1], perm[0]
        table[edge_at_u] = [(i, perm[i]) for i in range(m)]
        twisted = build_cover(g, m, table)
        assert count_transversals(twisted) > (m - g.degree(u)) * reduced_count(twisted)


def test_simplicial_peel_bound_for_dp():
    # dp(G, m) >= (m - d(u)) dp(G - u, m), equality for degree-2 simplicial
    for base in (cycle(4), cycle(5)):
        g = phi_expand(base, base.edges[0])
        u = g.n - 1
        assert u in simplicial_vertices(g)
        for m in (3, 4):
            whole, _ = dp_color_function(g, m)
            reduced, _ = dp_color_function(base, m)
            assert whole == (m - 2) * reduced


def test_dp_chromatic_number():
    assert dp_chromatic_number(cycle(4)) == 3
    assert dp_chromatic_number(path(4)) == 2
    assert dp_chromatic_number(complete(4)) == 4
    assert dp_chromatic_number(empty_graph(3)) == 1
    assert dp_chromatic_number(disjoint_union(cycle(4), path(2))) == 3


def test_cover_serialization_roundtrip():
    cov = _single_twist_c4(3, (1, 2, 0))
    text = cover_to_json(cov)
    doc = json.loads(text)
    assert doc["m"] == 3
    assert doc["matchings"]["2-3"] == [[1, 2], [2, 3], [3, 1]]
    back = cover_from_json(cycle(4), text)
    assert back.matchings == cov.matchings
    with pytest.raises(GraphError):
        build_cover(cycle(3), 2, {(0, 1): [(0, 0), (1, 0)]})


def test_gauge_serialization_roundtrip():
    _, wit = dp_color_function(cycle(4), 3)
    g = wit[0]
    back = gauge_from_json(gauge_to_json(g))
    assert back == g
