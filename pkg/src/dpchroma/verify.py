"""Scenario runner and identity-check harness over a declarative corpus.

Everything recorded here is a finite-m observation: the harness evaluates
exact values at the tested fold sizes and never extrapolates to statements
about all sufficiently large m.  Verdicts are derivable from the recorded
raw values alone.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import __version__
from .chromatic import (
    block_factorization_check,
    chromatic_number,
    chromatic_polynomial,
    simplicial_peel_identity,
    zykov_identity_check,
)
from .constructions import (
    clique_sum,
    complete,
    cycle,
    disjoint_union,
    named_graph,
    path,
    phi_expand,
    phi_family,
    star,
    theta,
)
from .corpus import cyclomatic_number, random_chordal, small_connected_corpus
from .cover import (
    BudgetExceededError,
    dp_color_function,
    is_h0_isomorphic,
)
from .graph import (
    Graph,
    blocks,
    components,
    induced_subgraph,
    is_connected,
    simplicial_vertices,
)
from .graphio import format_edge_list
from .polynomial import Polynomial
from .structure import (
    SearchInconclusiveError,
    even_ell_witness,
    gt0_certificate,
    gt_certificate,
    kaul_mudrock_gap,
    leading_term_check,
)

SEMANTICS = "finite-m observations only; no asymptotic claims"


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    source: str
    graph: Graph

    @property
    def sha256(self) -> str:
        return hashlib.sha256(format_edge_list(self.graph).encode("ascii")).hexdigest()


@dataclass
class ScenarioResult:
    """Per-graph table of exact values plus structural predictions.

    ``rows`` holds (m, P(G,m), P_DP(G,m) or None on budget refusal); the
    equality flag is always derived from the two values, never stored.
    """

    graph_id: str
    rows: list[tuple[int, int, Optional[int]]]
    even_ell: bool
    cert: str
    observed_equal_up_to_m: Optional[int]
    verdicts: dict[str, bool]

    def to_dict(self) -> dict:
        table = []
        for m, p, pdp in self.rows:
            table.append(
                {
                    "m": m,
                    "P": str(p),
                    "Pdp": None if pdp is None else str(pdp),
                    "equal": None if pdp is None else (pdp == p),
                }
            )
        return {
            "id": self.graph_id,
            "table": table,
            "predictions": {"even_ell": self.even_ell, "cert": self.cert},
            "observed_equal_up_to_m": self.observed_equal_up_to_m,
            "verdicts": dict(sorted(self.verdicts.items())),
        }


@dataclass
class CheckResult:
    id: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"id": self.id, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    version: str
    corpus: list[CorpusEntry]
    scenarios: list[ScenarioResult]
    checks: list[CheckResult]

    @property
    def pass_fail(self) -> tuple[int, int]:
        passed = failed = 0
        for sc in self.scenarios:
            for ok in sc.verdicts.values():
                passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
        for ck in self.checks:
            passed, failed = (passed + 1, failed) if ck.passed else (passed, failed + 1)
        return passed, failed

    def to_json(self) -> str:
        passed, failed = self.pass_fail
        doc = {
            "version": self.version,
            "semantics": SEMANTICS,
            "corpus": [
                {"id": c.id, "source": c.source, "sha256": c.sha256} for c in self.corpus
            ],
            "scenarios": [s.to_dict() for s in self.scenarios],
            "checks": [c.to_dict() for c in self.checks],
            "summary": {"pass": passed, "fail": failed},
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def run_scenario(
    g: Graph,
    m_values: Iterable[int],
    dp_budget: int = 2000,
    tree_cap: int = 100000,
    graph_id: str = "graph",
) -> ScenarioResult:
    """Fill the P / P_DP table and the finite-m consistency verdicts.

    Disconnected inputs get P_DP as the product over components.  A budget
    refusal records None and never contributes to a verdict.
    """
    rows: list[tuple[int, int, Optional[int]]] = []
    witnesses_at: dict[int, list] = {}
    poly = chromatic_polynomial(g)
    connected = is_connected(g)
    for m in sorted(set(m_values)):
        p = poly(m)
        pdp: Optional[int] = None
        try:
            if connected:
                pdp, wit = dp_color_function(g, m, dp_budget)
                witnesses_at[m] = wit
            else:
                pdp = 1
                for comp in components(g):
                    sub, _ = induced_subgraph(g, comp)
                    value, _ = dp_color_function(sub, m, dp_budget)
                    pdp *= value
        except BudgetExceededError:
            pdp = None
        rows.append((m, p, pdp))

    witness_edge = even_ell_witness(g)
    cert = "none"
    if connected:
        try:
            if gt0_certificate(g, tree_cap) is not None:
                cert = "gt0"
            elif gt_certificate(g, tree_cap) is not None:
                cert = "gt"
        except SearchInconclusiveError:
            cert = "none"

    verdicts: dict[str, bool] = {}
    ok = True
    for m, p, pdp in rows:
        if pdp is not None and pdp > p:
            ok = False
    verdicts["dominance"] = ok

    ok = True
    if witness_edge is not None:
        for m, p, pdp in rows:
            if pdp is None or m < 2:
                continue
            if kaul_mudrock_gap(g, witness_edge, m) and not pdp < p:
                ok = False
    verdicts["even_ell_gap_implies_strict"] = ok

    ok = True
    if cert in ("gt0", "gt") and connected:
        chi = chromatic_number(g)
        for m, p, pdp in rows:
            if pdp is None or m < chi or pdp != p:
                continue
            wit = witnesses_at.get(m, [])
            if not all(is_h0_isomorphic(w.expand(g, m)) for w in wit):
                ok = False
    verdicts["equality_witnesses_h0"] = ok

    observed: Optional[int] = None
    for m, p, pdp in rows:
        if pdp is None:
            continue
        if pdp == p:
            observed = m
        else:
            break

    return ScenarioResult(graph_id, rows, witness_edge is not None, cert, observed, verdicts)


# ---------------------------------------------------------------------------
# Corpus


def _butterfly() -> Graph:
    return clique_sum(complete(3), complete(3), [0], [0])


def default_corpus(seed: int = 1729) -> list[CorpusEntry]:
    """The shipped scenario corpus: generator calls plus catalog graphs."""
    entries = [
        CorpusEntry("C3", "cycle(3)", cycle(3)),
        CorpusEntry("C4", "cycle(4)", cycle(4)),
        CorpusEntry("C5", "cycle(5)", cycle(5)),
        CorpusEntry("C6", "cycle(6)", cycle(6)),
        CorpusEntry("K4", "complete(4)", complete(4)),
        CorpusEntry("P4", "path(4)", path(4)),
        CorpusEntry("star5", "star(5)", star(5)),
        CorpusEntry("theta-1-2-2", "theta([1,2,2])", theta([1, 2, 2])),
        CorpusEntry("theta-2-2-2", "theta([2,2,2])", theta([2, 2, 2])),
        CorpusEntry("theta-2-3-3", "theta([2,3,3])", theta([2, 3, 3])),
        CorpusEntry("butterfly", "clique_sum(K3,K3,[0],[0])", _butterfly()),
        CorpusEntry("paw", "clique_sum(K3,K2,[0],[0])", clique_sum(complete(3), complete(2), [0], [0])),
        CorpusEntry("C4+K3", "disjoint_union(C4,K3)", disjoint_union(cycle(4), complete(3))),
        CorpusEntry("fig1-G1", "named(fig1-G1)", named_graph("fig1-G1").graph),
        CorpusEntry("fig1-G2", "named(fig1-G2)", named_graph("fig1-G2").graph),
        CorpusEntry("fig2-G1", "named(fig2-G1)", named_graph("fig2-G1").graph),
        CorpusEntry("petersen", "named(petersen)", named_graph("petersen").graph),
        CorpusEntry("fig2-G3", "named(fig2-G3)", named_graph("fig2-G3").graph),
    ]
    return entries


def chordal_corpus(seed: int, count: int = 10) -> list[CorpusEntry]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(3, 6)
        g = random_chordal(rng, n, max_extra=3)
        out.append(CorpusEntry(f"chordal-{seed}-{k:02d}", f"random_chordal(seed={seed}, index={k})", g))
    return out


def multi_block_corpus() -> list[CorpusEntry]:
    """Twenty connected graphs with at least two blocks, cyclomatic <= 4."""
    k3, k4, c4, c5 = complete(3), complete(4), cycle(4), cycle(5)
    diamond = theta([1, 2, 2])
    specs: list[tuple[str, Graph]] = [
        ("P3", path(3)),
        ("P4", path(4)),
        ("star4", star(4)),
        ("star5", star(5)),
        ("paw", clique_sum(k3, complete(2), [0], [0])),
        ("butterfly", _butterfly()),
        ("K3-K4", clique_sum(k3, k4, [0], [0])),
        ("K3-C4", clique_sum(k3, c4, [0], [0])),
        ("K3-C5", clique_sum(k3, c5, [0], [0])),
        ("C4-C4", clique_sum(c4, c4, [0], [0])),
        ("C4-C5", clique_sum(c4, c5, [0], [0])),
        ("C5-C5", clique_sum(c5, c5, [0], [0])),
        ("diamond-K2", clique_sum(diamond, complete(2), [0], [0])),
        ("diamond-K3", clique_sum(diamond, k3, [0], [0])),
        ("K4-K2", clique_sum(k4, complete(2), [0], [0])),
        ("C4-K2", clique_sum(c4, complete(2), [0], [0])),
        ("C5-K2", clique_sum(c5, complete(2), [0], [0])),
        ("triple-K3", clique_sum(_butterfly(), k3, [4], [0])),
        ("K3-P3", clique_sum(k3, path(3), [0], [0])),
        ("C4-star3", clique_sum(c4, star(3), [0], [0])),
    ]
    return [CorpusEntry(f"blocks-{name}", f"blocks:{name}", g) for name, g in specs]


# ---------------------------------------------------------------------------
# Identity and inequality checks


def _dp_value(g: Graph, m: int, budget: int) -> int:
    value, _ = dp_color_function(g, m, budget)
    return value


def check_simplicial_peel(graphs: Sequence[tuple[str, Graph]]) -> CheckResult:
    bad = []
    total = 0
    for name, g in graphs:
        for u in simplicial_vertices(g):
            if g.n <= 1:
                continue
            left, right = simplicial_peel_identity(g, u)
            total += 1
            if left != right:
                bad.append(f"{name}:{u}")
    detail = f"{total} peel identities checked" + (f"; failed: {bad}" if bad else "")
    return CheckResult("simplicial_peel_identity", not bad, detail)


def check_degree2_peel_factor(budget: int = 3 * 10**4) -> CheckResult:
    """Attaching a triangle to an edge multiplies the DP count by (m-2)."""
    bases = [
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("diamond", theta([1, 2, 2])),
        ("butterfly", _butterfly()),
    ]
    bad = []
    total = 0
    for name, q in bases:
        g = phi_expand(q, q.edges[0])
        for m in (3, 4):
            total += 1
            lhs = _dp_value(g, m, budget)
            rhs = (m - 2) * _dp_value(q, m, budget)
            if lhs != rhs:
                bad.append(f"{name}@m={m}: {lhs} != {rhs}")
    detail = f"{total} degree-2 peel factorizations" + (f"; failed: {bad}" if bad else "")
    return CheckResult("simplicial_degree2_factor", not bad, detail)


def check_triangle_gluing_product(budget: int = 10**4) -> CheckResult:
    """Both halves of the triangle-gluing product law on closure members."""
    q = cycle(4)
    pq = chromatic_polynomial(q)
    dq3 = _dp_value(q, 3, budget)
    bad = []
    total = 0
    members = list(phi_family(q, 2))
    members.append(named_graph("fig1-G1").graph)
    for g in members:
        k = g.n - q.n
        total += 1
        if chromatic_polynomial(g) != (Polynomial((-2, 1)) ** k) * pq:
            bad.append(f"symbolic@{g.n}v")
        if cyclomatic_number(g) <= 5:
            if _dp_value(g, 3, budget) != (3 - 2) ** k * dq3:
                bad.append(f"dp@{g.n}v")
    detail = f"{total} closure members against the (x-2)^k product law" + (
        f"; failed: {bad}" if bad else ""
    )
    return CheckResult("triangle_gluing_product", not bad, detail)


def check_clique_gluing(entries: Sequence[CorpusEntry]) -> CheckResult:
    bad = []
    cases = [
        ("K3+K3/edge", complete(3), complete(3), [0, 1], [0, 1]),
        ("K3+C5/vertex", complete(3), cycle(5), [0], [0]),
        ("K4+K3/edge", complete(4), complete(3), [0, 1], [0, 1]),
        ("K4+K4/triangle", complete(4), complete(4), [0, 1, 2], [0, 1, 2]),
        ("diamond+K3/edge", theta([1, 2, 2]), complete(3), [0, 1], [0, 1]),
    ]
    for name, g1, g2, c1, c2 in cases:
        _, _, equal = zykov_identity_check(g1, g2, c1, c2)
        if not equal:
            bad.append(name)
    for entry in entries:
        if not is_connected(entry.graph) or len(blocks(entry.graph).blocks) < 2:
            continue
        _, _, equal = block_factorization_check(entry.graph)
        if not equal:
            bad.append(f"blocks:{entry.id}")
    detail = f"{len(cases)} clique gluings plus block factorizations" + (
        f"; failed: {bad}" if bad else ""
    )
    return CheckResult("clique_gluing_identity", not bad, detail)


def check_block_product_bound(m: int = 3, budget: int = 10**4) -> CheckResult:
    """m^(r-1) * Pdp(G, m) <= product of block values, with equality observations."""
    bad = []
    equalities = 0
    entries = multi_block_corpus()
    for entry in entries:
        g = entry.graph
        decomp = blocks(g)
        r = len(decomp.blocks)
        lhs = m ** (r - 1) * _dp_value(g, m, budget)
        rhs = 1
        for blk in decomp.blocks:
            sub, _ = induced_subgraph(g, blk)
            rhs *= _dp_value(sub, m, budget)
        if lhs > rhs:
            bad.append(entry.id)
        elif lhs == rhs:
            equalities += 1
    detail = (
        f"{len(entries)} multi-block graphs at m={m}; equality observed on "
        f"{equalities} of them"
    ) + (f"; failed: {bad}" if bad else "")
    return CheckResult("block_product_bound", not bad, detail)


def check_chordal_equality(seed: int, budget: int = 3 * 10**4) -> CheckResult:
    bad = []
    entries = chordal_corpus(seed)
    for entry in entries:
        poly = chromatic_polynomial(entry.graph)
        for m in (2, 3, 4):
            if _dp_value(entry.graph, m, budget) != poly(m):
                bad.append(f"{entry.id}@m={m}")
    detail = f"{len(entries)} chordal graphs, m=2..4" + (f"; failed: {bad}" if bad else "")
    return CheckResult("chordal_equality", not bad, detail)


def leading_term_targets() -> list[tuple[str, Graph]]:
    return [
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", complete(4)),
        ("petersen", named_graph("petersen").graph),
        ("fig1-G1", named_graph("fig1-G1").graph),
        ("fig1-G2", named_graph("fig1-G2").graph),
        ("fig2-G1", named_graph("fig2-G1").graph),
        ("fig2-G3", named_graph("fig2-G3").graph),
        ("theta-1-2-2", theta([1, 2, 2])),
        ("theta-2-2-2", theta([2, 2, 2])),
    ]


def check_leading_term() -> CheckResult:
    bad = []
    total = 0
    for name, g in leading_term_targets():
        for e in g.edges:
            total += 1
            _, ok = leading_term_check(g, e)
            if not ok:
                bad.append(f"{name}:{e}")
    detail = f"{total} edges audited for the contraction-difference leading term" + (
        f"; failed: {bad}" if bad else ""
    )
    return CheckResult("leading_term_audit", not bad, detail)


def gap_soundness_sweep(
    max_n: int = 5,
    max_cyclomatic: int = 3,
    m_values: Sequence[int] = (2, 3),
    budget: int = 10**4,
) -> list[str]:
    """Violations of: gap test true implies P_DP strictly below P."""
    violations = []
    for g in small_connected_corpus(max_n, max_cyclomatic):
        poly = chromatic_polynomial(g)
        for m in m_values:
            dp = None
            for e in g.edges:
                if kaul_mudrock_gap(g, e, m):
                    if dp is None:
                        dp = _dp_value(g, m, budget)
                    if not dp < poly(m):
                        violations.append(f"{g!r}@m={m},e={e}")
    return violations


def check_gap_soundness(max_n: int = 5) -> CheckResult:
    violations = gap_soundness_sweep(max_n=max_n)
    detail = f"sweep of connected graphs up to {max_n} vertices, cyclomatic <= 3, m in (2,3)" + (
        f"; violations: {violations}" if violations else ""
    )
    return CheckResult("gap_soundness", not violations, detail)


def check_theta_split(budget: int = 10**4) -> CheckResult:
    bad = []
    t122 = theta([1, 2, 2])
    p122 = chromatic_polynomial(t122)
    for m in (3, 4):
        if _dp_value(t122, m, budget) != p122(m):
            bad.append(f"theta(1,2,2)@m={m} not equal")
    t222 = theta([2, 2, 2])
    p222 = chromatic_polynomial(t222)
    for m in (2, 3):
        if not _dp_value(t222, m, budget) < p222(m):
            bad.append(f"theta(2,2,2)@m={m} not strict")
    detail = "odd path-sum theta equal at m=3,4; even path-sum theta strict at m=2,3" + (
        f"; failed: {bad}" if bad else ""
    )
    return CheckResult("theta_split", not bad, detail)


def check_certificates(tree_cap: int = 100000) -> CheckResult:
    bad = []
    for name in ("petersen", "fig2-G1"):
        if gt0_certificate(named_graph(name).graph, tree_cap) is None:
            bad.append(f"{name}: no strict certificate")
    g3 = named_graph("fig2-G3").graph
    if gt_certificate(g3, tree_cap) is None:
        bad.append("fig2-G3: no general certificate")
    if gt0_certificate(g3, tree_cap) is not None:
        bad.append("fig2-G3: unexpected strict certificate")
    if gt_certificate(cycle(4), tree_cap) is not None:
        bad.append("C4: unexpected certificate")
    detail = "catalog classifications (strict, general, definitive-none)" + (
        f"; failed: {bad}" if bad else ""
    )
    return CheckResult("certificate_classification", not bad, detail)


def verify_theorems(
    corpus: Optional[Sequence[CorpusEntry]] = None,
    max_m: int = 3,
    dp_budget: int = 2000,
    tree_cap: int = 100000,
    seed: int = 1729,
    sweep_max_n: int = 5,
) -> Report:
    """Run every scenario and identity check; deterministic given inputs."""
    entries = list(corpus) if corpus is not None else default_corpus(seed)
    scenarios = [
        run_scenario(e.graph, range(2, max_m + 1), dp_budget, tree_cap, e.id)
        for e in entries
    ]
    named_pairs = [(e.id, e.graph) for e in entries]
    checks = [
        check_simplicial_peel(named_pairs + [(e.id, e.graph) for e in chordal_corpus(seed)]),
        check_degree2_peel_factor(),
        check_triangle_gluing_product(),
        check_clique_gluing(entries),
        check_block_product_bound(),
        check_chordal_equality(seed),
        check_leading_term(),
        check_gap_soundness(max_n=sweep_max_n),
        check_theta_split(),
        check_certificates(tree_cap),
    ]
    return Report(__version__, entries, scenarios, checks)
