"""Turán numbers of Berge paths in r-uniform hypergraphs.

Closed forms and extremal constructions, Berge path/cycle detection, the
structural lemma checkers, and exact branch-and-bound oracles that confirm the
closed forms at small n.
"""

from .berge import (
    BergeSearch,
    BergeWitness,
    find_berge_cycle,
    find_berge_path,
    has_berge_cycle_at_least,
    hamiltonian_path,
    is_hamiltonian_connected,
    klm_hypothesis,
    longest_berge_path,
    verify_witness,
)
from .budget import Budget
from .errors import (
    BergeError,
    BudgetExhausted,
    ConvexityError,
    DivisibilityError,
    DuplicateEdgeError,
    InvalidInputError,
    InvalidParameterError,
    InvalidVertexError,
    InvariantViolation,
    OutOfTheoremRangeError,
    ParseError,
    PreconditionError,
    WrongRegimeError,
)
from .extremal import (
    TuranParams,
    berge_cycle_free_bound,
    construct,
    construct_clique_extremal,
    construct_extremal,
    construct_redblue_extremal,
    construct_small_k,
    g_upper_bound,
    g_value,
    gykl_bound,
    karamata_check,
    kr_count_bound,
    lemi_check,
    turan_formula,
)
from .hypercore import (
    Graph,
    Hypergraph,
    RedBlueGraph,
    binom,
    components,
    count_cliques,
    delete_vertices,
    incident_count,
    incident_edges,
    longest_path,
    parse_graph,
    parse_hypergraph,
    read_graph,
    read_hypergraph,
    write_graph,
    write_hypergraph,
)
from .search import (
    OracleResult,
    graph_kr_oracle,
    iter_nonisomorphic_hypergraphs,
    redblue_g_oracle,
    turan_oracle,
    verify_range,
)
from .structure import (
    GoodSetReport,
    LemmaReport,
    check_endpoint_confinement,
    check_good_set_disjunction,
    check_moreover_bound,
    find_good_sets,
    find_low_degree_cluster,
    find_small_neighborhood_set,
    is_good_set,
    is_very_good_pair,
)

__version__ = "0.1.0"
