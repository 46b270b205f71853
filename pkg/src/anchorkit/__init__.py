"""Anchor-driven reconstructibility toolkit for small graphs.

Everything revolves around one question: when is a graph determined, up to
isomorphism, by the multiset of its one-vertex-deleted subgraphs?  The
library finds uniquely-placed induced subgraphs (anchors), summarizes how
the rest of the graph hangs off them (shadow graphs), grants certificates
of reconstructibility backed by machine-checkable witnesses, and validates
each certificate against a brute-force reconstruction oracle on small
orders.
"""

from .anchor import (
    AnchorVerdict,
    AnchorWitness,
    BalanceClass,
    anchor_sizes,
    anchor_verdict,
    balance_class,
    copies_of,
    extend_to_maximal,
    find_anchors,
    is_balanced,
    is_distinguishable_in_deck,
    is_quasi_balanced,
    maximal_anchors,
    orbit_removal_anchors,
)
from .certify import (
    Certificate,
    CertificateKind,
    OracleVerdict,
    certify,
    certify_tree,
    oracle_reconstruct,
    validate_certificate,
)
from .deck import (
    Deck,
    DeckFormatError,
    IllegitimateDeckError,
    deck_of,
    decks_equal,
    direct_count,
    format_deck,
    kelly_count,
    parse_deck,
    read_deck_file,
    write_deck_file,
)
from .enumeration import enumerate_graphs, enumerate_trees
from .graphcore import (
    Graph6Error,
    SimpleGraph,
    automorphisms,
    automorphism_generators,
    canonical_graph6,
    canonical_key,
    canonical_label,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    isomorphic,
    is_vertex_transitive,
    orbits,
    parse_graph6,
    path_graph,
    star_graph,
    write_graph6,
)
from .shadow import (
    ShadowGraph,
    ShadowIso,
    build_shadow,
    is_shadow_vertex_transitive,
    shadow_anchors,
    shadow_automorphisms,
    shadow_deck,
    shadow_from_text,
    shadow_isomorphic,
    shadow_orbits,
    shadow_to_text,
    unbuild_shadow,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorVerdict",
    "AnchorWitness",
    "BalanceClass",
    "Certificate",
    "CertificateKind",
    "Deck",
    "DeckFormatError",
    "Graph6Error",
    "IllegitimateDeckError",
    "OracleVerdict",
    "ShadowGraph",
    "ShadowIso",
    "SimpleGraph",
    "anchor_sizes",
    "anchor_verdict",
    "automorphism_generators",
    "automorphisms",
    "balance_class",
    "build_shadow",
    "canonical_graph6",
    "canonical_key",
    "canonical_label",
    "certify",
    "certify_tree",
    "complete_graph",
    "copies_of",
    "cycle_graph",
    "deck_of",
    "decks_equal",
    "direct_count",
    "disjoint_union",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_trees",
    "extend_to_maximal",
    "find_anchors",
    "format_deck",
    "is_balanced",
    "is_distinguishable_in_deck",
    "is_quasi_balanced",
    "is_shadow_vertex_transitive",
    "is_vertex_transitive",
    "isomorphic",
    "kelly_count",
    "maximal_anchors",
    "oracle_reconstruct",
    "orbit_removal_anchors",
    "orbits",
    "parse_deck",
    "parse_graph6",
    "path_graph",
    "read_deck_file",
    "shadow_anchors",
    "shadow_automorphisms",
    "shadow_deck",
    "shadow_from_text",
    "shadow_isomorphic",
    "shadow_orbits",
    "shadow_to_text",
    "star_graph",
    "unbuild_shadow",
    "validate_certificate",
    "write_deck_file",
    "write_graph6",
]
