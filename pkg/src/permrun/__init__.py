"""Exact permutation pattern matching parameterised by alternating runs."""

from .hardness import HardnessInstance, clique_to_embedding, reduce_clique
from .oracle import BudgetExceeded, Graph, brute_force_match, has_clique, lis_length, parse_graph
from .pathwidth import (PathDecomposition, PatternGraph, build_pattern_graph, lemma_decomposition,
                        validate_decomposition)
from .perm import (Direction, Embedding, Permutation, PermutationError, RunDecomposition, flatten,
                   is_embedding, parse_permutation, run_count, run_decomposition, vales)
from .runmatch import (BoundViolation, DPTable, MatchingFunction, MatchReport, PaddedText, candidates,
                       d_rep, dp_step, dp_trace, enumerate_matching_functions, make_matching_function,
                       match, match_report, pad_text, u_rep)

__all__ = [
    "BoundViolation", "BudgetExceeded", "DPTable", "Direction", "Embedding", "Graph",
    "HardnessInstance", "MatchReport", "MatchingFunction", "PaddedText", "PathDecomposition",
    "PatternGraph", "Permutation", "PermutationError", "RunDecomposition", "brute_force_match",
    "build_pattern_graph", "candidates", "clique_to_embedding", "d_rep", "dp_step", "dp_trace",
    "enumerate_matching_functions", "flatten", "has_clique", "is_embedding", "lemma_decomposition",
    "lis_length", "make_matching_function", "match", "match_report", "pad_text", "parse_graph",
    "parse_permutation", "reduce_clique", "run_count", "run_decomposition", "u_rep",
    "validate_decomposition", "vales",
]
