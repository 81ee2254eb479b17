"""Insanity puzzles: tower solver, census and block search."""

from .config import SearchConfig
from .graph import create_graph, get_report, run_analysis, verify_mutando
from .state import AnalysisState

__all__ = [
    "create_graph",
    "run_analysis",
    "get_report",
    "verify_mutando",
    "AnalysisState",
    "SearchConfig",
]
