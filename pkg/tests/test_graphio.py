import pytest

from dpchroma import GraphError, build_graph, complete, cycle, path
from dpchroma.graphio import (
    format_dot,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    read_graph_text,
)


def test_edge_list_roundtrip():
    g = build_graph(5, [(0, 1), (2, 3), (1, 4)])
    assert read_graph_text(format_edge_list(g)) == g
    text = "3 2\n0 1\n1 2\n"
    assert parse_edge_list(text) == path(3)


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("")
    with pytest.raises(GraphError):
        parse_edge_list("3\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("2 1\n0 0\n")


def test_graph6_known_strings():
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6(">>graph6<<Bw") == complete(3)
    assert parse_graph6("Ch") == path(4)
    assert parse_graph6("Cl") == cycle(4)
    with pytest.raises(GraphError):
        parse_graph6("")
    with pytest.raises(GraphError):
        parse_graph6("B\x19")


def test_reader_detects_format():
    assert read_graph_text("Bw") == complete(3)
    assert read_graph_text("3 3\n0 1\n1 2\n0 2\n") == cycle(3)


def test_dot_output():
    dot = format_dot(build_graph(3, [(0, 1)]))
    assert "0 -- 1;" in dot and "2;" in dot and dot.startswith("graph G {")
