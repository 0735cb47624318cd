"""Automorphism groups of lexicographic graph products and their wreath decompositions."""

from .autgroup import (
    Permutation,
    PermGroup,
    automorphism_group,
    brute_force_automorphisms,
    group_order,
    is_automorphism,
    relation_equivalence_check,
    wreath_embedding_order,
)
from .graph import (
    Graph,
    GraphError,
    co_neighbors,
    complement,
    complete,
    cycle,
    empty,
    is_connected,
    lex_product,
    neighbors,
    path,
    regularity,
)
from .graph_io import parse_edge_list, parse_graph6, parse_spec, write_graph6
from .poly import IntPolynomial, have_common_root, scale_negate, shift_reflect
from .spectral import SpectralVerdict, char_poly, float_spectrum, spectral_condition
from .verdict import (
    Quantum,
    Report,
    SabidussiSets,
    analyze,
    classical_condition,
    quantum_verdict,
    sabidussi_sets,
    verify_sabidussi,
)

__version__ = "0.1.0"
