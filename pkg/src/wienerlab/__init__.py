"""Wiener-index vertex-deletion invariants, constructions, and stream search."""

from .analysis import (
    AnalysisReport,
    DeltaSpectrum,
    VertexReport,
    analyze,
    delta_decomposition,
    delta_pair,
    delta_spectrum,
    delta_v,
    good_vertices,
    transmission,
    wiener_index,
)
from .constructions import (
    BunchParams,
    LilyParams,
    TailParams,
    VerificationResult,
    build_bunch,
    build_chorded_cycle_12,
    build_complete,
    build_cycle,
    build_lily,
    build_lily_general,
    build_path,
    lily_tail_params,
    verify_bunch_family,
    verify_lily_family,
)
from .formats import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    from_edge_list,
    is_connected,
    remove_vertex,
)
from .search import (
    ScanSummary,
    SearchFilter,
    SearchResult,
    enumerate_connected,
    rank_by_proportion,
    scan_stream,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BunchParams",
    "DeltaSpectrum",
    "DistanceMatrix",
    "Graph",
    "LilyParams",
    "ScanSummary",
    "SearchFilter",
    "SearchResult",
    "TailParams",
    "UNREACHABLE",
    "VerificationResult",
    "VertexReport",
    "all_pairs_distances",
    "analyze",
    "bfs_distances",
    "build_bunch",
    "build_chorded_cycle_12",
    "build_complete",
    "build_cycle",
    "build_lily",
    "build_lily_general",
    "build_path",
    "delta_decomposition",
    "delta_pair",
    "delta_spectrum",
    "delta_v",
    "emit_edgelist",
    "emit_graph6",
    "enumerate_connected",
    "from_edge_list",
    "good_vertices",
    "is_connected",
    "lily_tail_params",
    "parse_edgelist",
    "parse_graph6",
    "rank_by_proportion",
    "remove_vertex",
    "scan_stream",
    "transmission",
    "verify_bunch_family",
    "verify_lily_family",
    "wiener_index",
]
