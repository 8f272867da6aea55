"""Command-line interface: polynomials, DP minimization, covers, edge
profiles, certificates, constructions, and the verification harness.

Graph arguments accept a file path (edge-list or graph6), a catalog id
(``petersen``, ``fig2-G3``, ...), one of the patterns ``C<n>``/``P<n>``/
``K<n>``/``S<n>``, or ``theta:a,b,c``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .chromatic import chromatic_polynomial
from .constructions import (
    clique_sum,
    complete,
    cycle,
    named_graph,
    named_graph_ids,
    path,
    phi_expand,
    star,
    theta,
)
from .cover import (
    BudgetExceededError,
    count_transversals,
    cover_from_json,
    dp_color_function,
    gauge_to_json,
)
from .graph import Graph, GraphError
from .graphio import format_dot, format_edge_list, read_graph_file
from .structure import (
    INFINITY,
    SearchInconclusiveError,
    certificate_to_json,
    edge_profile,
    even_ell_witness,
    girth,
    gt0_certificate,
    gt_certificate,
)
from .verify import default_corpus, verify_theorems, CorpusEntry


def resolve_graph(spec: str) -> Graph:
    """Turn a CLI graph argument into a Graph."""
    if os.path.exists(spec):
        return read_graph_file(spec)
    if spec in named_graph_ids():
        return named_graph(spec).graph
    if spec.startswith("theta:"):
        lengths = [int(x) for x in spec[len("theta:"):].split(",")]
        return theta(lengths)
    if len(spec) >= 2 and spec[0] in "CKPS" and spec[1:].isdigit():
        n = int(spec[1:])
        return {"C": cycle, "K": complete, "P": path, "S": star}[spec[0]](n)
    raise GraphError(
        f"cannot resolve graph {spec!r}: not a file, catalog id, pattern, or theta spec"
    )


def _emit_graph(g: Graph, fmt: str, dot: bool) -> None:
    if dot:
        print(format_dot(g), end="")
    elif fmt == "json":
        print(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True))
    else:
        print(format_edge_list(g), end="")


def _cmd_poly(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    p = chromatic_polynomial(g)
    if args.format == "json":
        print(json.dumps({"coefficients": p.to_coeff_strings()}))
    else:
        print(p)
    return 0


def _cmd_dpf(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    value, witnesses = dp_color_function(g, args.m, args.budget)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": args.m,
                    "value": str(value),
                    "witnesses": [json.loads(gauge_to_json(w)) for w in witnesses],
                },
                sort_keys=True,
            )
        )
    else:
        print(value)
        if witnesses:
            print(gauge_to_json(witnesses[0]))
    return 0


def _cmd_cover_count(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    with open(args.cover, "r", encoding="ascii") as fh:
        cover = cover_from_json(g, fh.read())
    value = count_transversals(cover)
    if args.format == "json":
        print(json.dumps({"count": str(value)}))
    else:
        print(value)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    profiles = [edge_profile(g, e) for e in g.edges]
    gv = girth(g)
    witness = even_ell_witness(g)
    if args.format == "json":
        doc = {
            "girth": None if gv == INFINITY else int(gv),
            "even_ell_witness": list(witness) if witness else None,
            "edges": [
                {
                    "edge": list(p.edge),
                    "ell": None if p.ell == INFINITY else int(p.ell),
                    "bridge": p.is_bridge,
                    "shortest_cycles": str(p.shortest_cycle_count),
                }
                for p in profiles
            ],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"girth: {'inf' if gv == INFINITY else int(gv)}")
        print(f"even-ell witness: {witness if witness else 'none'}")
        for p in profiles:
            ell = "inf" if p.ell == INFINITY else int(p.ell)
            print(f"  {p.edge}: ell={ell} bridge={p.is_bridge} cycles={p.shortest_cycle_count}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    search = gt0_certificate if args.gt0 else gt_certificate
    cert = search(g, args.tree_cap)
    if cert is None:
        print(json.dumps({"certificate": None, "definitive": True}))
    else:
        print(certificate_to_json(cert))
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "theta":
        g = theta([int(x) for x in args.params[0].split(",")])
    elif args.family == "named":
        g = named_graph(args.params[0]).graph
    elif args.family == "phi":
        base = resolve_graph(args.params[0])
        g = phi_expand(base, (int(args.params[1]), int(args.params[2])))
    elif args.family == "clique-sum":
        g1 = resolve_graph(args.params[0])
        g2 = resolve_graph(args.params[1])
        c1 = [int(x) for x in args.params[2].split(",")]
        c2 = [int(x) for x in args.params[3].split(",")]
        g = clique_sum(g1, g2, c1, c2)
    else:
        raise GraphError(f"unknown construction {args.family!r}")
    _emit_graph(g, args.format, args.dot)
    return 0


def _load_corpus_dir(directory: str) -> list[CorpusEntry]:
    entries = []
    for name in sorted(os.listdir(directory)):
        if not name.endswith((".el", ".g6", ".txt")):
            continue
        path_ = os.path.join(directory, name)
        g = read_graph_file(path_)
        entries.append(CorpusEntry(name, f"file:{name}", g))
    if not entries:
        raise GraphError(f"no graph files (*.el, *.g6, *.txt) found in {directory}")
    return entries


def _cmd_verify(args: argparse.Namespace) -> int:
    corpus = _load_corpus_dir(args.corpus) if args.corpus else default_corpus(args.seed)
    report = verify_theorems(
        corpus,
        max_m=args.max_m,
        dp_budget=args.budget,
        tree_cap=args.tree_cap,
        seed=args.seed,
        sweep_max_n=args.sweep_n,
    )
    passed, failed = report.pass_fail
    if args.format == "json":
        print(report.to_json())
    else:
        for sc in report.scenarios:
            flags = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in sorted(sc.verdicts.items()))
            print(f"scenario {sc.graph_id}: cert={sc.cert} even_ell={sc.even_ell} {flags}")
        for ck in report.checks:
            print(f"check {ck.id}: {'ok' if ck.passed else 'FAIL'} ({ck.detail})")
        print(f"summary: pass={passed} fail={failed}")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpchroma",
        description="Exact chromatic polynomials, DP color functions, and certificates.",
    )
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--seed", type=int, default=1729, help="seed for randomized corpora")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the chromatic polynomial")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("dpf", help="DP color function value and witnesses")
    p.add_argument("graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=_cmd_dpf)

    p = sub.add_parser("cover", help="operations on explicit covers")
    cover_sub = p.add_subparsers(dest="cover_command", required=True)
    pc = cover_sub.add_parser("count", help="count the transversals of a cover")
    pc.add_argument("graph")
    pc.add_argument("cover")
    pc.set_defaults(func=_cmd_cover_count)

    p = sub.add_parser("analyze", help="edge profiles, girth, even-ell witness")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("certify", help="search for a spanning-tree certificate")
    p.add_argument("graph")
    p.add_argument("--gt0", action="store_true", help="force fundamental-cycle witnesses")
    p.add_argument("--tree-cap", type=int, default=100000)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("construct", help="build a graph from a family")
    p.add_argument("family", choices=("theta", "named", "phi", "clique-sum"))
    p.add_argument("params", nargs="+")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run the scenario and identity checks")
    p.add_argument("--corpus", help="directory of graph files replacing the built-in corpus")
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--tree-cap", type=int, default=100000)
    p.add_argument("--sweep-n", type=int, default=5)
    p.set_defaults(func=_cmd_verify)

    return parser


def cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, SearchInconclusiveError) as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
