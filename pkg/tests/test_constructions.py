import pytest

from dpchroma import (
    GraphError,
    Polynomial,
    blocks,
    build_graph,
    canonical_key,
    chromatic_number,
    chromatic_polynomial,
    clique_sum,
    complete,
    cycle,
    delete_vertex,
    girth,
    gt0_certificate,
    join_complete,
    named_graph,
    named_graph_ids,
    path,
    phi_expand,
    phi_family,
    simplicial_vertices,
    star,
    theta,
)
from dpchroma.constructions import ThetaSpec

from oracles import brute_isomorphic


def test_theta_small_cases():
    assert brute_isomorphic(theta([2, 3]), cycle(5))
    diamond = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert brute_isomorphic(theta([1, 2, 2]), diamond)
    k23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert brute_isomorphic(theta([2, 2, 2]), k23)


def test_theta_validation():
    with pytest.raises(GraphError):
        theta([1, 1, 2])
    with pytest.raises(GraphError):
        theta([1, 1])
    with pytest.raises(GraphError):
        theta([2])
    ThetaSpec((1, 2))  # smallest legal spec is the triangle
    assert brute_isomorphic(theta([1, 2]), cycle(3))


def test_theta_shape_properties():
    g = theta([2, 3, 4])
    k = 3
    assert g.degree(0) == k and g.degree(1) == k
    assert all(g.degree(v) == 2 for v in range(2, g.n))
    assert g.n == 2 + sum(a - 1 for a in (2, 3, 4))
    assert len(g.edges) == 2 + 3 + 4
    no_hub, _ = delete_vertex(g, 1)
    no_hubs, _ = delete_vertex(no_hub, 0)
    from dpchroma import components

    assert len(components(no_hubs)) == k


def test_phi_expand():
    g = phi_expand(cycle(4), (0, 1))
    assert g.n == 5 and len(g.edges) == 6
    assert simplicial_vertices(g) == [4]
    assert g.degree(4) == 2
    with pytest.raises(GraphError):
        phi_expand(cycle(4), (0, 2))


def test_phi_family_contains_catalog_members():
    keys4 = {canonical_key(g) for g in phi_family(cycle(4), 4)}
    assert canonical_key(named_graph("fig1-G1").graph) in keys4
    keys6 = {canonical_key(g) for g in phi_family(cycle(6), 4)}
    assert canonical_key(named_graph("fig1-G2").graph) in keys6


def test_phi_family_product_law():
    q = cycle(4)
    pq = chromatic_polynomial(q)
    for g in phi_family(q, 3):
        k = g.n - q.n
        assert chromatic_polynomial(g) == (Polynomial((-2, 1)) ** k) * pq
        assert chromatic_number(g) == (3 if k else chromatic_number(q))


def test_phi_family_deduplicates():
    members = list(phi_family(cycle(4), 2))
    keys = [canonical_key(g) for g in members]
    assert len(keys) == len(set(keys))
    # one expansion of C4 is unique up to isomorphism
    assert sum(1 for g in members if g.n == 5) == 1


def test_clique_sum():
    diamond = clique_sum(complete(3), complete(3), [0, 1], [0, 1])
    assert brute_isomorphic(diamond, theta([1, 2, 2]))
    g = clique_sum(complete(3), cycle(5), [0], [0])
    assert g.n == 7 and len(g.edges) == 8
    assert len(blocks(g).blocks) == 2
    with pytest.raises(GraphError):
        clique_sum(cycle(4), complete(3), [0, 2], [0, 1])
    with pytest.raises(GraphError):
        clique_sum(complete(3), complete(3), [0, 1, 2, 3], [0, 1, 2, 3])
    with pytest.raises(GraphError):
        clique_sum(complete(3), complete(3), [0, 1], [0])


def test_join_complete():
    w4 = join_complete(cycle(4), 1)
    assert w4.n == 5 and len(w4.edges) == 8
    assert brute_isomorphic(join_complete(build_graph(3, []), 1), star(4))
    assert gt0_certificate(join_complete(cycle(5), 1)) is not None
    with pytest.raises(GraphError):
        join_complete(cycle(4), 0)


def test_named_graphs_revalidate():
    assert named_graph_ids() == ["fig1-G1", "fig1-G2", "fig2-G1", "fig2-G3", "petersen"]
    g1 = named_graph("fig1-G1").graph
    assert g1.n == 8 and len(g1.edges) == 12
    from dpchroma import edge_profile

    assert all(edge_profile(g1, e).ell == 3 for e in g1.edges)
    pet = named_graph("petersen").graph
    assert pet.n == 10 and len(pet.edges) == 15 and girth(pet) == 5
    assert all(pet.degree(v) == 3 for v in range(10))
    g3 = named_graph("fig2-G3").graph
    assert g3.n == 12 and len(g3.edges) == 15
    g2_1 = named_graph("fig2-G1").graph
    assert g2_1.n == 8 and len(g2_1.edges) == 12
    g2 = named_graph("fig1-G2").graph
    assert g2.n == 10 and len(g2.edges) == 14
    with pytest.raises(GraphError):
        named_graph("fig9-G9")
