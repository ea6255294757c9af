"""Edit-distance attack on clock-controlled LFSR keystream generators."""
from __future__ import annotations

from .attack import AttackConfig, AttackError, AttackReport, CandidateSolution, run_attack, verify_consistency
from .editmatrix import EditMatrix, compute_matrix, edit_distance, first_stop_column, is_stop_column
from .generators import AsgInstance, SgInstance, alternate, shrink
from .lfsr import FeedbackPolynomial, LfsrState, generate, is_consistent_segment, parse_polynomial, solve_initial_state
from .patterns import BitPattern, build_is_pattern, derive_anti_pattern, enumerate_states, hypotheses, relax_pattern, trim_for_h
from .searchgraph import InducedGraph, build_induced_graph, count_shortest_paths, cut_set, enumerate_shortest_paths, to_dot

__version__ = "0.1.0"

__all__ = [
    "AsgInstance",
    "AttackConfig",
    "AttackError",
    "AttackReport",
    "BitPattern",
    "CandidateSolution",
    "EditMatrix",
    "FeedbackPolynomial",
    "InducedGraph",
    "LfsrState",
    "SgInstance",
    "alternate",
    "build_induced_graph",
    "build_is_pattern",
    "compute_matrix",
    "count_shortest_paths",
    "cut_set",
    "derive_anti_pattern",
    "edit_distance",
    "enumerate_shortest_paths",
    "enumerate_states",
    "first_stop_column",
    "generate",
    "hypotheses",
    "is_consistent_segment",
    "is_stop_column",
    "parse_polynomial",
    "relax_pattern",
    "run_attack",
    "shrink",
    "solve_initial_state",
    "to_dot",
    "trim_for_h",
    "verify_consistency",
]
