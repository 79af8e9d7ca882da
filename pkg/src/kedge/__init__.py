"""Edge-connectivity toolkit: fragment analysis, removable structures,
seeded generators, and batch verification campaigns."""

from .connectivity import (
    EXHAUSTIVE_LIMIT,
    ConnectivityReport,
    EdgeCut,
    connectivity_report,
    edge_connectivity,
    edge_connectivity_bruteforce,
    enumerate_min_edge_cuts,
    is_k_connected,
    is_k_edge_connected,
    local_edge_connectivity,
    vertex_connectivity,
    vertex_cut_below,
)
from .errors import (
    ExtractionFailed,
    GenerationError,
    GraphFormatError,
    InternalCheckError,
    KedgeError,
    TheoremViolation,
)
from .fragments import (
    DescentResult,
    Fragment,
    FragmentDegreeReport,
    OverlapResult,
    OverlapScanStats,
    OverlapVerdict,
    Semifragment,
    check_fragment_overlap,
    fragment_degree_bounds,
    fragments_of,
    minimal_fragment_descent,
    scan_overlap_cases,
    verify_descent_conclusion,
)
from .generators import (
    ENUM_GRAPH_LIMIT,
    GenSpec,
    all_connected_graphs,
    all_graphs,
    complete,
    complete_bipartite,
    cycle_graph,
    gen_hamiltonian_stack,
    gen_with_hypotheses,
    generate,
    named_instance,
    petersen_graph,
    random_graph,
    two_cliques_bridged,
)
from .graph import Graph, boundary_edge_count, build, components, normalize_edge
from .harness import (
    CampaignConfig,
    CampaignResult,
    CounterexampleReport,
    TightnessReport,
    TrialReport,
    analyze,
    counterexample_search,
    run_campaign,
    verify_tightness,
    write_report,
)
from .io import (
    graph_payload,
    load_graph,
    parse_edge_list,
    parse_graph6,
    save_graph,
    write_edge_list,
    write_graph6,
)
from .removal import (
    Embedding,
    HCSubgraph,
    RemovalCertificate,
    decompose_cut,
    embed_tree,
    extract_connected_subgraph,
    find_removable_edge,
    find_removable_tree,
    find_removable_vertex,
    iter_tree_embeddings,
    removable_tree_via_thomassen,
    residual_min_cut,
)
from .rng import SplitMix64, derive_seed
from .trees import (
    TreeSpec,
    caterpillar_tree,
    enumerate_trees,
    parse_tree_spec,
    path_tree,
    prufer_decode,
    prufer_encode,
    spider_tree,
    star_tree,
    tree_from_graph,
)

__version__ = "1.0.0"

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "ENUM_GRAPH_LIMIT",
    "CampaignConfig",
    "CampaignResult",
    "ConnectivityReport",
    "CounterexampleReport",
    "DescentResult",
    "EdgeCut",
    "Embedding",
    "ExtractionFailed",
    "Fragment",
    "FragmentDegreeReport",
    "GenSpec",
    "GenerationError",
    "Graph",
    "GraphFormatError",
    "HCSubgraph",
    "InternalCheckError",
    "KedgeError",
    "OverlapResult",
    "OverlapScanStats",
    "OverlapVerdict",
    "RemovalCertificate",
    "Semifragment",
    "SplitMix64",
    "TheoremViolation",
    "TightnessReport",
    "TreeSpec",
    "TrialReport",
    "all_connected_graphs",
    "all_graphs",
    "analyze",
    "boundary_edge_count",
    "build",
    "caterpillar_tree",
    "check_fragment_overlap",
    "complete",
    "complete_bipartite",
    "components",
    "connectivity_report",
    "counterexample_search",
    "cycle_graph",
    "decompose_cut",
    "derive_seed",
    "edge_connectivity",
    "edge_connectivity_bruteforce",
    "embed_tree",
    "enumerate_min_edge_cuts",
    "enumerate_trees",
    "extract_connected_subgraph",
    "find_removable_edge",
    "find_removable_tree",
    "find_removable_vertex",
    "fragment_degree_bounds",
    "fragments_of",
    "gen_hamiltonian_stack",
    "gen_with_hypotheses",
    "generate",
    "graph_payload",
    "is_k_connected",
    "is_k_edge_connected",
    "iter_tree_embeddings",
    "load_graph",
    "local_edge_connectivity",
    "minimal_fragment_descent",
    "named_instance",
    "normalize_edge",
    "parse_edge_list",
    "parse_graph6",
    "parse_tree_spec",
    "path_tree",
    "petersen_graph",
    "prufer_decode",
    "prufer_encode",
    "random_graph",
    "removable_tree_via_thomassen",
    "residual_min_cut",
    "run_campaign",
    "save_graph",
    "scan_overlap_cases",
    "spider_tree",
    "star_tree",
    "tree_from_graph",
    "two_cliques_bridged",
    "verify_descent_conclusion",
    "verify_tightness",
    "vertex_connectivity",
    "vertex_cut_below",
    "write_edge_list",
    "write_graph6",
    "write_report",
]
