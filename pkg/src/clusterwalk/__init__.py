"""Hitting times, effective resistances, Kirchhoff index and Kemeny's constant
on simple connected graphs, with closed forms for graph clusters G1{G2}."""
from .graph_core import (
    ClusterGraph, ClusterSpec, DisconnectedGraphError, Graph, GraphError, StructureReport,
    cluster, format_edge_list, generate, make_graph, parse_edge_list, structure,
)
from .spectra import NumericKernelError, Spectrum, laplacian_pinv, solve_linear, walk_spectrum
from .invariants import (
    HittingEstimate, KemenyResult, ResistanceMatrix, hitting_matrix_resistance,
    hitting_matrix_solve, kemeny, kirchhoff_index, resistance_matrix, simulate_hitting,
    stationary,
)
from .symmetry import (
    HSReport, SymmetrySurvey, Verdict, check_return_time_identity, classify,
    is_highly_symmetric, is_walk_regular, resistance_regular_vertices,
    screen_necessary_conditions, survey,
)
from .formulas import (
    BoundSet, ClusterFormulaReport, bounds, cluster_kemeny_corrected, cluster_kemeny_printed,
    cluster_kirchhoff, cluster_report, sandwich_check, self_cluster_report,
)

__version__ = "0.1.0"
