"""Exact cluster-algebra computations: seed mutation, exchange graphs,
geodesic-loop layer signatures and the automorphism groups Aut(A) and Aut(E_A).

Python functions number mutation directions and vertices from 0; the command
line and the quiver JSON format number them from 1.
"""

from .builtin import BUILTIN_NAMES, builtin_matrix, builtin_quiver
from .classify import (
    check_signature_conjecture,
    canonical_quiver,
    dynkin_type,
    finite_type_check,
    is_mutation_finite,
    mutation_class,
    rank3_subquiver_scan,
)
from .exchange_graph import (
    ExchangeGraph,
    all_layer_signatures,
    build_graph,
    distance,
    export_graph,
    geodesic_loops,
    layer_signature,
)
from .groups import (
    PermGroup,
    cluster_automorphism_group,
    compare_groups,
    graph_automorphism_group,
    graph_isomorphism,
)
from .laurent import LaurentPolynomial, NonExactDivision, laurent_add, laurent_exact_div, laurent_mul
from .matrices import (
    ExchangeMatrix,
    ValuedQuiver,
    find_symmetrizer,
    is_indecomposable,
    matrix_isomorphisms,
    matrix_to_quiver,
    quiver_isomorphisms,
    quiver_to_matrix,
)
from .mutation import apply_sequence, mutate_matrix, mutate_seed
from .seeds import LabeledSeed, canonical_seed_key

__all__ = [
    "BUILTIN_NAMES", "builtin_matrix", "builtin_quiver",
    "check_signature_conjecture", "canonical_quiver", "dynkin_type", "finite_type_check",
    "is_mutation_finite", "mutation_class", "rank3_subquiver_scan",
    "ExchangeGraph", "all_layer_signatures", "build_graph", "distance", "export_graph",
    "geodesic_loops", "layer_signature",
    "PermGroup", "cluster_automorphism_group", "compare_groups", "graph_automorphism_group",
    "graph_isomorphism",
    "LaurentPolynomial", "NonExactDivision", "laurent_add", "laurent_exact_div", "laurent_mul",
    "ExchangeMatrix", "ValuedQuiver", "find_symmetrizer", "is_indecomposable",
    "matrix_isomorphisms", "matrix_to_quiver", "quiver_isomorphisms", "quiver_to_matrix",
    "apply_sequence", "mutate_matrix", "mutate_seed",
    "LabeledSeed", "canonical_seed_key",
]
