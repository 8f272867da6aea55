import math

import pytest

from dpchroma import (
    GraphError,
    SearchInconclusiveError,
    build_graph,
    clique_sum,
    complete,
    cycle,
    disjoint_union,
    edge_profile,
    even_ell_witness,
    girth,
    gt0_certificate,
    gt_certificate,
    join_complete,
    kaul_mudrock_gap,
    leading_term_check,
    named_graph,
    path,
    prop_tree_edge_audit,
    star,
    theta,
    validate_certificate,
)
from dpchroma.corpus import connected_graphs_up_to
from dpchroma.structure import TreeCertificate, certificate_from_json, certificate_to_json

from oracles import all_cycles_through_edge


def test_edge_profiles():
    paw = clique_sum(complete(3), complete(2), [0], [0])
    pendant = next(e for e in paw.edges if 3 in e)
    p = edge_profile(paw, pendant)
    assert p.is_bridge and p.ell == math.inf and p.shortest_cycle_count == 0
    p = edge_profile(complete(4), (0, 1))
    assert p.ell == 3 and p.shortest_cycle_count == 2
    p = edge_profile(cycle(5), (1, 2))
    assert p.ell == 5 and p.shortest_cycle_count == 1
    p = edge_profile(named_graph("petersen").graph, (0, 1))
    assert p.ell == 5 and p.shortest_cycle_count == 4
    with pytest.raises(GraphError):
        edge_profile(cycle(4), (0, 2))


def test_ell_matches_exhaustive_cycle_enumeration():
    for g in connected_graphs_up_to(5):
        for e in g.edges:
            lengths = all_cycles_through_edge(g, e)
            want = min(lengths) if lengths else math.inf
            prof = edge_profile(g, e)
            assert prof.ell == want
            if lengths:
                assert prof.shortest_cycle_count == lengths.count(min(lengths))


def test_girth():
    assert girth(named_graph("petersen").graph) == 5
    assert girth(cycle(4)) == 4
    assert girth(star(5)) == math.inf
    assert girth(disjoint_union(cycle(3), cycle(4))) == 3


def test_even_ell_witness():
    assert even_ell_witness(cycle(4)) is not None
    assert even_ell_witness(complete(4)) is None
    assert even_ell_witness(named_graph("fig1-G1").graph) is None
    assert even_ell_witness(theta([2, 2, 2])) is not None


def test_kaul_mudrock_gap_examples():
    assert kaul_mudrock_gap(cycle(4), (0, 1), 2) is True
    assert kaul_mudrock_gap(cycle(3), (0, 1), 3) is False
    assert kaul_mudrock_gap(path(2), (0, 1), 2) is False
    with pytest.raises(ValueError):
        kaul_mudrock_gap(cycle(4), (0, 1), 1)


def test_leading_term_check():
    diff, ok = leading_term_check(cycle(4), (0, 1))
    assert ok and diff.coeffs == (0, 1, -1)
    diff, ok = leading_term_check(cycle(5), (0, 1))
    assert ok and diff.degree == 2 and diff.leading_coefficient == 1
    diff, ok = leading_term_check(complete(4), (0, 1))
    assert ok and diff.degree == 3 and diff.leading_coefficient == 2
    with pytest.raises(GraphError):
        leading_term_check(star(4), (0, 1))


def test_cycle_certificates():
    cert = gt_certificate(cycle(5))
    assert cert is not None and cert.kind == "gt" and cert.ell_gt == 5
    validate_certificate(cycle(5), cert)
    assert prop_tree_edge_audit(cycle(5), cert)
    assert gt_certificate(cycle(4)) is None
    assert gt0_certificate(cycle(4)) is None
    cert0 = gt0_certificate(cycle(5))
    assert cert0 is not None and cert0.kind == "gt0"


def test_tree_graph_certificate_is_vacuous():
    cert = gt0_certificate(path(4))
    assert cert is not None and cert.witnesses == () and cert.ell_gt == math.inf
    assert prop_tree_edge_audit(path(4), cert)


def test_dominating_vertex_gives_certificate():
    for base in (cycle(4), path(4), disjoint_union(path(2), path(2))):
        g = join_complete(base, 1)
        assert gt0_certificate(g) is not None


def test_certificate_searches_are_definitive_or_raise():
    g3 = named_graph("fig2-G3").graph
    assert gt_certificate(g3) is not None
    assert gt0_certificate(g3) is None
    with pytest.raises(SearchInconclusiveError):
        gt0_certificate(g3, tree_cap=1)
    with pytest.raises(GraphError):
        gt_certificate(disjoint_union(path(2), path(2)))


def test_petersen_certificate():
    pet = named_graph("petersen").graph
    cert = gt0_certificate(pet)
    assert cert is not None
    validate_certificate(pet, cert)
    assert prop_tree_edge_audit(pet, cert)
    assert cert.ell_gt == 5


def test_validate_rejects_tampering():
    cert = gt0_certificate(cycle(5))
    bad = TreeCertificate(cert.tree, cert.witnesses, "gt0", 7)
    with pytest.raises(GraphError):
        validate_certificate(cycle(5), bad)
    wrong_witness = TreeCertificate(
        cert.tree, tuple((e, cyc[:-1] + (cyc[-1],)) for e, cyc in cert.witnesses), "gt0", 5
    )
    validate_certificate(cycle(5), wrong_witness)  # unchanged content still passes
    truncated = TreeCertificate(cert.tree, (), "gt0", cert.ell_gt)
    with pytest.raises(GraphError):
        validate_certificate(cycle(5), truncated)


def test_certificate_serialization_roundtrip():
    pet = named_graph("petersen").graph
    cert = gt0_certificate(pet)
    back = certificate_from_json(certificate_to_json(cert))
    assert back == cert
    tree_cert = gt0_certificate(path(3))
    assert certificate_from_json(certificate_to_json(tree_cert)) == tree_cert
