"""Numerical verification: brackets, identities and independence."""
from .brackets import poisson_bracket, fd_poisson_bracket, bracket_scale, bracket_from_gradients
from .commutation import (
    BracketReport, BracketCheck, commutation_suite, algebra_suite, run_checks, jacobi_defect,
)
from .traces import TraceReport, trace_identity_check, casimir_identities, check_identities
from .independence import RankReport, independence_rank
from .report import format_report

__all__ = [
    "poisson_bracket", "fd_poisson_bracket", "bracket_scale", "bracket_from_gradients",
    "BracketReport", "BracketCheck", "commutation_suite", "algebra_suite", "run_checks",
    "jacobi_defect",
    "TraceReport", "trace_identity_check", "casimir_identities", "check_identities",
    "RankReport", "independence_rank",
    "format_report",
]
