"""Exact good-choice counting for non-interlaced CNF formulas."""
from .formula import (ConflictSet, EmptyClauseError, Formula, ParseError, analyze,
                      conflict_set, crossing_witness, is_interlaced, parse_dimacs,
                      parse_native, permute, to_dimacs, to_native)
from .paths import (PathMatrix, add_edge_value, build_base_matrix, path_value_dp,
                    path_value_matpow)
from .counter import CountResult, Verdict, apply_corrections, count, decide, trace_run
from .oracle import GeneratorParams, brute_force_count, brute_force_sat, random_formula
from .reorder import ReorderResult, find_order_exact, find_order_greedy
from .harness import FuzzReport, fuzz, shrink

__all__ = [
    "ConflictSet", "EmptyClauseError", "Formula", "ParseError", "analyze", "conflict_set",
    "crossing_witness", "is_interlaced", "parse_dimacs", "parse_native", "permute",
    "to_dimacs", "to_native", "PathMatrix", "add_edge_value", "build_base_matrix",
    "path_value_dp", "path_value_matpow", "CountResult", "Verdict", "apply_corrections",
    "count", "decide", "trace_run", "GeneratorParams", "brute_force_count",
    "brute_force_sat", "random_formula", "ReorderResult", "find_order_exact",
    "find_order_greedy", "FuzzReport", "fuzz", "shrink",
]
