"""
State definition for the puzzle analysis pipeline.

The state follows one puzzle file through the check chain:
Load → Check proper → Solve tower → Solve block → Report.
"""

from typing import Optional, TypedDict

from .block import BlockPlacement
from .model import ColorBasis, CubeColoring, Puzzle
from .textio import PuzzleFile
from .tower import PartialSolution, SolutionSet, TowerRealization


class AnalysisState(TypedDict, total=False):
    """
    The state of one analysis run.

    - Start with the puzzle text and the requested checks
    - Parse it and decide whether every cube shows every color
    - Solve the tower when the puzzle is proper
    - Solve the block when asked (and, for the Mutando chain, only when
      the tower has a solution)
    - Finally write the report
    """

    # Input
    source: str
    checks: list[str]  # "tower", "block"
    strict: bool  # improper cubes are an error instead of a finding
    require_tower: bool  # block only after a tower solution
    allow_repeats: bool
    target_l: int
    dedupe: bool

    # Parsed input
    puzzle_file: PuzzleFile
    basis: ColorBasis
    colorings: Optional[list[CubeColoring]]

    # Proper check
    proper: bool
    improper_rows: list[int]  # 1-based, file order
    puzzle: Optional[Puzzle]

    # Tower
    partials: list[PartialSolution]
    solution_sets: list[SolutionSet]  # size target_l
    solutions: list[SolutionSet]  # size 2
    realization: Optional[TowerRealization]

    # Block
    placements: list[BlockPlacement]
    block_checked: bool

    # Output
    report: str
