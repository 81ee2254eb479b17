"""
Configuration and report templates for the Insanity puzzle engine.
"""

import os
from dataclasses import dataclass
from typing import Optional

from .errors import BadThreads


@dataclass
class SearchConfig:
    """Configuration for solver, census and Mutando runs."""

    # Basis
    basis_size: int = 4
    allow_repeats: bool = False

    # Reports
    target_l: int = 2
    dedupe: bool = False

    # Parallel runs (None: use INSANITY_THREADS, default 1)
    threads: Optional[int] = None
    chunks_per_thread: int = 8


def resolve_threads(config: SearchConfig) -> int:
    if config.threads:
        return max(1, config.threads)
    raw = os.getenv("INSANITY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise BadThreads(f"INSANITY_THREADS must be an integer, got {raw!r}") from None


# REPORT TEMPLATES


HEADER_TEMPLATE = """colors: {colors}
cubes: {cube_count}
proper: {proper}"""


SOLVE_REPORT_TEMPLATE = """puzzle: {puzzle}
magic number: {magic}
partial solutions: {partial_count}
{partial_lines}
{legend}
solutions: {solution_count}
{solution_lines}
symmetry factor: {symmetry}"""


SOLUTION_SETS_TEMPLATE = """solution sets (l={l}): {set_count}
{set_lines}"""


PARTIAL_LINE_TEMPLATE = "  [{index}] cols {cols}  entries {entries}  {one_based}"

SOLUTION_LINE_TEMPLATE = "  [{index}] {members}"

TOWER_LINE_TEMPLATE = (
    "  cube {index}: front {front} back {back} left {left} right {right} top {top} bottom {bottom}"
)

INDEX_LEGEND = "  (cols: 0-based column per cube; {(i,s_i)}: cube i, column s_i, both from 1)"


BLOCK_REPORT_TEMPLATE = """block placements: {count}{note}
{placement_lines}"""


PLACEMENT_LINE_TEMPLATE = "  [{index}] {positions}  faces {faces}"


CENSUS_CSV_HEADER = "n,solutions,puzzles"


CENSUS_SUMMARY_TEMPLATE = """n: {n}
puzzles: {total}
max solutions: {max_solutions}
achieved: {achieved}
gaps: {gaps}"""
