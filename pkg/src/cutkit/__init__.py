"""Graph connectivity toolkit: minimum cuts from few maximum flows.

The core pieces are exact minimum isolating cuts (two flow phases for a
whole terminal set), derandomized splitter-based set families, demand-
weighted expander decomposition, and deterministic / randomized minimum
Steiner cut drivers metered in max-flow calls.
"""

from .bench import (
    BenchReport,
    BenchRow,
    default_bench_config,
    det_call_budget,
    report_to_csv,
    report_to_json,
    run_bench,
)
from .errors import ContractViolation, CutkitError, DecompositionError, InputError
from .expander import (
    DemandVector,
    ExpanderCheck,
    ExpanderDecomposition,
    augmented_demands,
    clusters_cut_by,
    expander_decompose,
    sparsity,
    split_terminal_sum,
    verify_expander,
)
from .generators import (
    FAMILIES,
    GeneratorSpec,
    clique_graph,
    cycle_graph,
    dumbbell_graph,
    generate,
    gnp_graph,
    grid_graph,
    planted_cut_graph,
)
from .graph import (
    Cut,
    VertexSet,
    WeightedGraph,
    boundary_edges,
    build_graph,
    components,
    components_after_removal,
    contract,
    cut_weight,
    induced_subgraph,
    is_connected,
    parse_edgelist,
    write_edgelist,
)
from .isolating import (
    IsolatingCutEntry,
    IsolatingCutResult,
    bipartition_schedule,
    minimum_isolating_cuts,
)
from .maxflow import (
    ENGINE_NAMES,
    DinicEngine,
    FlowMeter,
    FlowResult,
    ScipyEngine,
    get_engine,
    max_flow,
    min_cut_separating,
    parse_dimacs,
    write_dimacs,
)
from .oracles import (
    enumerate_cuts,
    enumerate_min_cut_sides,
    naive_isolating,
    naive_steiner,
    stoer_wagner,
)
from .splitters import (
    SetFamily,
    SplitterFunction,
    family_size_bound,
    isolator_family,
    isolator_family_min2,
    splitter_family,
    verify_isolator,
)
from .steiner import (
    AlgoConfig,
    CutReport,
    Estimate,
    SteinerInstance,
    approx_mincut_estimate,
    global_mincut_det,
    sparsify_terminals,
    steiner_mincut_det,
    steiner_mincut_rand,
    unbalanced_case,
)

__version__ = "0.1.0"

__all__ = [
    "AlgoConfig",
    "BenchReport",
    "BenchRow",
    "ContractViolation",
    "Cut",
    "CutReport",
    "CutkitError",
    "DecompositionError",
    "DemandVector",
    "DinicEngine",
    "ENGINE_NAMES",
    "Estimate",
    "ExpanderCheck",
    "ExpanderDecomposition",
    "FAMILIES",
    "FlowMeter",
    "FlowResult",
    "GeneratorSpec",
    "InputError",
    "IsolatingCutEntry",
    "IsolatingCutResult",
    "ScipyEngine",
    "SetFamily",
    "SplitterFunction",
    "SteinerInstance",
    "VertexSet",
    "WeightedGraph",
    "approx_mincut_estimate",
    "augmented_demands",
    "bipartition_schedule",
    "boundary_edges",
    "build_graph",
    "clique_graph",
    "clusters_cut_by",
    "components",
    "components_after_removal",
    "contract",
    "cut_weight",
    "cycle_graph",
    "default_bench_config",
    "det_call_budget",
    "dumbbell_graph",
    "enumerate_cuts",
    "enumerate_min_cut_sides",
    "expander_decompose",
    "family_size_bound",
    "generate",
    "get_engine",
    "global_mincut_det",
    "gnp_graph",
    "grid_graph",
    "induced_subgraph",
    "is_connected",
    "isolator_family",
    "isolator_family_min2",
    "max_flow",
    "min_cut_separating",
    "minimum_isolating_cuts",
    "naive_isolating",
    "naive_steiner",
    "parse_dimacs",
    "parse_edgelist",
    "planted_cut_graph",
    "report_to_csv",
    "report_to_json",
    "run_bench",
    "sparsify_terminals",
    "sparsity",
    "split_terminal_sum",
    "splitter_family",
    "steiner_mincut_det",
    "steiner_mincut_rand",
    "stoer_wagner",
    "unbalanced_case",
    "verify_expander",
    "verify_isolator",
    "write_dimacs",
    "write_edgelist",
]
