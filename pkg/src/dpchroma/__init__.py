"""Exact chromatic polynomials, DP color functions, and structural
certificates for desk-scale graphs."""

__version__ = "0.1.0"

from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    blocks,
    bridges,
    build_graph,
    canonical_key,
    coloring_number,
    components,
    contract_edge,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    is_connected,
    perfect_elimination_ordering,
    simplicial_vertices,
    spanning_tree_count,
    spanning_trees,
)
from .polynomial import Polynomial
from .chromatic import (
    block_factorization_check,
    chromatic_number,
    chromatic_polynomial,
    count_proper_colorings,
    simplicial_peel_identity,
    whitney_polynomial,
    zykov_identity_check,
)
from .cover import (
    BudgetExceededError,
    Cover,
    GaugeAssignment,
    build_cover,
    count_transversals,
    count_transversals_ie,
    delete_cover_edge,
    dp_chromatic_number,
    dp_color_function,
    dp_color_function_components,
    extend_partial,
    h0_cover,
    is_h0_isomorphic,
    twist_set,
)
from .structure import (
    EdgeProfile,
    SearchInconclusiveError,
    TreeCertificate,
    edge_profile,
    even_ell_witness,
    girth,
    gt0_certificate,
    gt_certificate,
    kaul_mudrock_gap,
    leading_term_check,
    prop_tree_edge_audit,
    validate_certificate,
)
from .constructions import (
    NamedGraph,
    ThetaSpec,
    clique_sum,
    complete,
    cycle,
    disjoint_union,
    empty_graph,
    join_complete,
    named_graph,
    named_graph_ids,
    path,
    phi_expand,
    phi_family,
    star,
    theta,
)
