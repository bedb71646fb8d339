"""diamup: raising graph diameter by edge deletion.

Exact polynomial solvers for the tractable cases, brute-force oracles for
ground truth on small graphs, and generators for the vertex-cover-based
hard-instance constructions.
"""

from .graphs import (
    INF,
    DIAM_2_OR_3,
    DIAM_3,
    DIAM_GE_4,
    DISCONNECTS,
    Graph,
    GraphFormatError,
    bfs_distances,
    canonical_edge,
    canonical_edges,
    classify_deletion,
    complete_graph,
    components,
    cycle_graph,
    cycle_weights,
    delete_edges,
    diameter,
    diametral_pair,
    distance,
    distance_table,
    find_path_of_length_at_least,
    format_edge_list,
    girth,
    is_connected,
    parse_edge_list,
    path_graph,
    petersen_graph,
    spanning_tree_from_path,
    star_graph,
)
from .oracle import (
    BudgetExceededError,
    NonmonotonicityWitness,
    OracleBudget,
    connected_graphs_up_to,
    nonmonotonicity_witness,
    oracle_da,
    oracle_eda,
    oracle_mda,
    oracle_meda,
    oracle_mdi,
)
from .solvers import (
    ProblemSpec,
    RelevantPath,
    Solution,
    VerificationError,
    check_witness,
    deletions_for_relevant_path,
    extremal_diameter_graph,
    is_relevant,
    max_edges_for_diameter,
    relevant_path,
    solve,
    solve_complete,
    solve_da,
    solve_eda3,
    solve_mda3,
    solve_mdi3,
    solve_meda3,
)
from .reductions import (
    ConstructionError,
    EquivalenceReport,
    ReductionArtifact,
    VCInstance,
    amplify_copies,
    compose_general,
    extend_path,
    min_vertex_cover,
    read_artifact,
    reduce_vc_meda5_diam3,
    reduce_vc_meda5_diam4,
    triangle_chain,
    verify_equivalence,
    write_artifact,
)

__version__ = "0.1.0"
