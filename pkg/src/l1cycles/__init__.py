"""Cycle and path extension in L_1-graphs, with brute-force cross-checks."""

from .conditions import (
    BipartiteClass,
    ConditionReport,
    FamilyKWitness,
    classify_bipartite_l1,
    family_k_witness,
    hypotheses_ok,
    is_claw_free,
    is_l_graph,
    is_one_tough,
    is_two_connected,
    l_deficit,
    min_common_d2,
    remark3_holds,
    satisfies_hypotheses,
    validate_bipartite_class,
)
from .extension import (
    ExtensionResult,
    ExtensionTrace,
    CommonNeighborError,
    ExceptionFamilyError,
    HypothesisError,
    build_hamiltonian,
    build_spanning_path,
    cycle_through_set,
    extend_cycle,
    extend_path,
    seed_cycle_through,
)
from .generators import (
    LayerSpec,
    family_k,
    fig3_counterexamples,
    knn_variant,
    layered_join,
    nonpancyclic_a,
    nonpancyclic_b,
    random_satisfying,
)
from .graph import (
    Graph,
    GraphError,
    SizeLimitError,
    VertexSequence,
    ball,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    distance,
    edge_count_between,
    parse_graph6,
    path_graph,
    petersen_graph,
    to_dot,
    to_graph6,
)
from .oracle import (
    SpectrumReport,
    cycle_spectrum,
    find_cycle,
    find_path,
    has_perfect_matching_oracle,
    is_hamiltonian_oracle,
    path_vertex_counts,
)

__version__ = "0.1.0"
