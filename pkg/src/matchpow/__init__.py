"""Exact matching powers of monomial ideals and their homological invariants."""

__version__ = "0.1.0"

from .errors import InvalidInput, ParseError, Unsupported
from .monomials import (
    GF2,
    GF3,
    RATIONALS,
    FieldSpec,
    MonomialIdeal,
    big_cosize,
    colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    initial_degree,
    matching_power,
    maximal_ideal,
    minimalize,
    monomial_grade,
    parse_ideal_text,
    emit_ideal_text,
    partial_star,
    polarize,
    squarefree_veronese,
    unit_ideal,
    zero_ideal,
)
from .simplicial import (
    SimplicialComplex,
    clique_complex,
    free_facet_count,
    free_vertex_facets,
    height,
    induced_subcomplex,
    is_unmixed,
    krull_dim,
    make_complex,
    minimal_primes,
    stanley_reisner_complex,
)
from .homology import (
    BettiTable,
    HomologicalSummary,
    betti_table_hochster,
    betti_table_koszul,
    depth_lower_bound_check,
    has_linear_resolution,
    is_cohen_macaulay,
    normalized_depth_function,
    reduced_homology_ranks,
    summary,
)
from .graphs import (
    SimpleGraph,
    VwcLabeling,
    canonical_form,
    connected_components,
    closed_neighborhood_deletion,
    delete_vertices,
    edge_ideal,
    emit_graph6,
    enumerate_graphs,
    enumerate_perfect_matching_graphs,
    generate_star_triangle,
    has_perfect_matching,
    induced_matching_number,
    is_bipartite,
    is_cameron_walker,
    is_chordal,
    is_complete,
    is_forest,
    is_star_triangle,
    is_very_well_covered,
    matching_number,
    parse_graph6,
    tutte_condition,
    vwc_cm_labeling_search,
    whisker,
)
