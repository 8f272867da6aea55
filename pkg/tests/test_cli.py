import json

import pytest

from dpchroma import cycle, h0_cover
from dpchroma.cli import cli, resolve_graph
from dpchroma.cover import cover_to_json
from dpchroma.graphio import format_edge_list


def test_resolve_graph_patterns(tmp_path):
    assert resolve_graph("C5") == cycle(5)
    assert resolve_graph("theta:1,2,2").n == 4
    assert resolve_graph("petersen").n == 10
    f = tmp_path / "g.el"
    f.write_text(format_edge_list(cycle(4)))
    assert resolve_graph(str(f)) == cycle(4)


def test_poly_command(capsys):
    assert cli(["poly", "C4"]) == 0
    assert capsys.readouterr().out.strip() == "x^4 - 4*x^3 + 6*x^2 - 3*x"
    assert cli(["--format", "json", "poly", "K3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["coefficients"] == ["0", "2", "-3", "1"]


def test_dpf_command(capsys, tmp_path):
    f = tmp_path / "C4.el"
    f.write_text(format_edge_list(cycle(4)))
    assert cli(["dpf", str(f), "--m", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "15"
    assert "tree" in out[1]
    assert cli(["--format", "json", "dpf", "C5", "--m", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["value"] == "0"


def test_dpf_budget_exit_code(capsys):
    assert cli(["dpf", "petersen", "--m", "3", "--budget", "10"]) == 2
    assert "budget" in capsys.readouterr().err


def test_cover_count_command(capsys, tmp_path):
    g = tmp_path / "C3.el"
    g.write_text(format_edge_list(cycle(3)))
    c = tmp_path / "cover.json"
    c.write_text(cover_to_json(h0_cover(cycle(3), 3)))
    assert cli(["cover", "count", str(g), str(c)]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_analyze_command(capsys):
    assert cli(["--format", "json", "analyze", "C4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["girth"] == 4
    assert doc["even_ell_witness"] == [0, 1]
    assert len(doc["edges"]) == 4


def test_certify_command(capsys):
    assert cli(["certify", "petersen", "--gt0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "gt0" and doc["ell_gt"] == 5
    assert cli(["certify", "C4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"certificate": None, "definitive": True}
    assert cli(["certify", "fig2-G3", "--gt0", "--tree-cap", "1"]) == 2


def test_construct_commands(capsys):
    assert cli(["construct", "theta", "2,2,2"]) == 0
    assert capsys.readouterr().out.startswith("5 6\n")
    assert cli(["construct", "named", "fig2-G1"]) == 0
    assert capsys.readouterr().out.startswith("8 12\n")
    assert cli(["construct", "phi", "C4", "0", "1"]) == 0
    assert capsys.readouterr().out.startswith("5 6\n")
    assert cli(["construct", "clique-sum", "K3", "K3", "0,1", "0,1"]) == 0
    assert capsys.readouterr().out.startswith("4 5\n")
    assert cli(["construct", "named", "mystery"]) == 2


def test_construct_dot(capsys):
    assert cli(["construct", "named", "petersen", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph G {")


def test_verify_command_json_deterministic(capsys):
    args = ["--format", "json", "verify", "--max-m", "2", "--sweep-n", "3"]
    assert cli(args) == 0
    first = capsys.readouterr().out
    assert cli(args) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["summary"]["fail"] == 0


def test_verify_corpus_dir(capsys, tmp_path):
    (tmp_path / "a.el").write_text(format_edge_list(cycle(4)))
    (tmp_path / "b.el").write_text(format_edge_list(cycle(5)))
    assert cli(["verify", "--corpus", str(tmp_path), "--max-m", "2", "--sweep-n", "3"]) == 0
    out = capsys.readouterr().out
    assert "scenario a.el" in out and "scenario b.el" in out


def test_unresolvable_graph_exits_2(capsys):
    assert cli(["poly", "no-such-graph"]) == 2
    assert "error" in capsys.readouterr().err
