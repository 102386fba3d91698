"""Exact-satisfiability toolkit for counted clauses (exactly-j-true, j <= 4)."""

from .formula import (
    Clause,
    Formula,
    SolveResult,
    Trail,
    assign,
    degree,
    evaluate,
    is_heavy,
    link,
    negate,
    reconstruct_model,
)
from .oracle import OracleReport, brute_solve, count_clause_solutions
from .simplify import resolve, simplify_to_fixpoint

__all__ = [
    "Clause",
    "Formula",
    "SolveResult",
    "Trail",
    "assign",
    "degree",
    "evaluate",
    "is_heavy",
    "link",
    "negate",
    "reconstruct_model",
    "OracleReport",
    "brute_solve",
    "count_clause_solutions",
    "resolve",
    "simplify_to_fixpoint",
]
