"""Structural analysis and centrality-based percolation attacks on directed graphs.

Workflow: ingest a contact edge list (or generate a synthetic graph), read
whole-graph metrics, rank nodes by centrality, detect communities, then
simulate targeted or random node-removal attacks and trace how density and
average path length degrade step by step.
"""

from .centrality import CentralityScores, centrality_scores, top_k
from .community import CommunityPartition, filter_communities, louvain, modularity
from .errors import (
    ConvergenceError,
    DataFormatError,
    DegenerateGraphError,
    GenerationError,
    NoFinitePathsError,
    PartitionError,
    PerconetError,
    UnknownNodeError,
)
from .generators import GeneratorSpec, generate
from .graph import (
    CleaningReport,
    DirectedGraph,
    EdgeRecord,
    build_graph,
    clean_records,
    graph_from_json,
    graph_to_json,
    ingest_csv,
    load_graph,
    read_edge_records,
    save_graph,
)
from .metrics import (
    ComponentSummary,
    MetricsSnapshot,
    average_path_length,
    component_summary,
    compute_snapshot,
    degree_centralization,
    density,
    hop_census,
    transitivity,
)
from .percolation import (
    AttackStrategy,
    PercolationStep,
    PercolationTrace,
    compare_traces,
    run_attack,
    static_target_list,
    trace_from_counts,
)
from .report import degree_by_country, emit_trace_series, load_country_mapping, trace_from_json

__version__ = "0.1.0"

__all__ = [
    "AttackStrategy",
    "CentralityScores",
    "CleaningReport",
    "CommunityPartition",
    "ComponentSummary",
    "ConvergenceError",
    "DataFormatError",
    "DegenerateGraphError",
    "DirectedGraph",
    "EdgeRecord",
    "GenerationError",
    "GeneratorSpec",
    "MetricsSnapshot",
    "NoFinitePathsError",
    "PartitionError",
    "PerconetError",
    "PercolationStep",
    "PercolationTrace",
    "UnknownNodeError",
    "average_path_length",
    "build_graph",
    "centrality_scores",
    "clean_records",
    "compare_traces",
    "component_summary",
    "compute_snapshot",
    "degree_by_country",
    "degree_centralization",
    "density",
    "emit_trace_series",
    "filter_communities",
    "generate",
    "graph_from_json",
    "graph_to_json",
    "hop_census",
    "ingest_csv",
    "load_country_mapping",
    "load_graph",
    "louvain",
    "modularity",
    "read_edge_records",
    "run_attack",
    "save_graph",
    "static_target_list",
    "top_k",
    "trace_from_counts",
    "trace_from_json",
    "transitivity",
]
