"""Exact toolkit for closed neighborhood ideals and edge ideals of graphs.

Decides whether the maximal homogeneous ideal is an associated prime of
ideal powers (socle test, bounded witness search, certificate verification),
builds the extremal chain families realizing the diameter bounds 7t−8
(closed neighborhood ideals) and 4t−5 (edge ideals), and audits those bounds
step by step on concrete instances.  All arithmetic is exact exponent-vector
combinatorics; a compiled kernel backend is used when available (see
``cnideals.kernels``).
"""

__version__ = "0.1.0"

from .assprimes import (
    AssResult,
    AstabScan,
    OracleInfeasible,
    WitnessReport,
    astab_scan,
    certify,
    disconnected_combine,
    max_ideal_in_ass_exact,
    max_ideal_in_ass_witness_search,
    verify_witness,
)
from .audit import (
    AuditReport,
    EdgeAuditReport,
    audit_edge,
    audit_edge_bound,
    audit_ni,
    audit_ni_bound,
)
from .corpus import CorpusSpec, enumerate_graphs, graphs_on
from .families import (
    PairEntry,
    PairTableReport,
    base_graph_edge,
    base_graph_ni,
    certificate_ni,
    chain_edge,
    chain_ni,
    verify_pair_table,
)
from .graphs import (
    Graph,
    Path,
    closed_neighborhood,
    closed_neighborhood_set,
    connected_components,
    contains_odd_cycle,
    diameter,
    disjoint_neighborhood_vertices,
    disjoint_union,
    distance,
    format_edge_list,
    geodesic,
    induced_subgraph,
    is_bridge,
    parse_edge_list,
    read_edge_list,
    set_distance,
    write_edge_list,
)
from .ideals import (
    MonomialIdeal,
    colon_by_monomial,
    contains,
    edge_ideal,
    ideal_equals,
    ideal_from_vectors,
    intersect,
    minimalize,
    ni_ideal,
    power,
    power_contains,
)
from .kernels import BACKEND
from .limits import DEFAULT_CAPS, CapExceeded, Caps
from .monomials import (
    Monomial,
    format_ideal,
    format_monomial,
    parse_ideal_text,
    parse_monomial,
)

__all__ = [
    "AssResult",
    "AstabScan",
    "AuditReport",
    "BACKEND",
    "CapExceeded",
    "Caps",
    "CorpusSpec",
    "DEFAULT_CAPS",
    "EdgeAuditReport",
    "Graph",
    "Monomial",
    "MonomialIdeal",
    "OracleInfeasible",
    "PairEntry",
    "PairTableReport",
    "Path",
    "WitnessReport",
    "astab_scan",
    "audit_edge",
    "audit_edge_bound",
    "audit_ni",
    "audit_ni_bound",
    "base_graph_edge",
    "base_graph_ni",
    "certificate_ni",
    "certify",
    "chain_edge",
    "chain_ni",
    "closed_neighborhood",
    "closed_neighborhood_set",
    "colon_by_monomial",
    "connected_components",
    "contains",
    "contains_odd_cycle",
    "diameter",
    "disconnected_combine",
    "disjoint_neighborhood_vertices",
    "disjoint_union",
    "distance",
    "edge_ideal",
    "enumerate_graphs",
    "format_edge_list",
    "format_ideal",
    "format_monomial",
    "geodesic",
    "graphs_on",
    "ideal_equals",
    "ideal_from_vectors",
    "induced_subgraph",
    "intersect",
    "is_bridge",
    "max_ideal_in_ass_exact",
    "max_ideal_in_ass_witness_search",
    "minimalize",
    "ni_ideal",
    "parse_edge_list",
    "parse_ideal_text",
    "parse_monomial",
    "power",
    "power_contains",
    "read_edge_list",
    "set_distance",
    "verify_pair_table",
    "verify_witness",
    "write_edge_list",
]
