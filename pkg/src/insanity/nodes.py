"""
Node functions for the puzzle analysis pipeline.

Each function is one step of the check chain:
1. load_puzzle - Parse the puzzle text
2. check_proper - Find cubes that miss a color, build the canonical puzzle
3. solve_tower - Partial solutions, solution sets and one tower realization
4. solve_block_node - Placements for the 2x2x1 block
5. write_report - Render the report text

Tracing goes to stderr so that reports on stdout stay byte-identical
between runs.
"""

import sys
from typing import Literal

from .block import placement_positions, solve_block
from .config import (
    BLOCK_REPORT_TEMPLATE,
    HEADER_TEMPLATE,
    INDEX_LEGEND,
    PARTIAL_LINE_TEMPLATE,
    PLACEMENT_LINE_TEMPLATE,
    SOLUTION_LINE_TEMPLATE,
    SOLUTION_SETS_TEMPLATE,
    SOLVE_REPORT_TEMPLATE,
    TOWER_LINE_TEMPLATE,
    SearchConfig,
)
from .errors import ImproperRow
from .model import cube_type_from_values
from .state import AnalysisState
from .textio import parse_puzzle
from .tower import (
    magic_number,
    partial_solutions,
    realize_tower,
    solution_sets,
    symmetry_factor,
)


# Global settings (initialized in init_pipeline)
config = None
verbose_mode = False


def init_pipeline(search_config: SearchConfig = None, verbose: bool = False):
    """Set the run configuration and the tracing switch."""
    global config, verbose_mode

    config = search_config or SearchConfig()
    verbose_mode = verbose


def _log(message: str, indent: int = 0):
    """Print message to stderr if verbose mode is enabled."""
    if verbose_mode:
        prefix = "  " * indent
        print(f"{prefix}{message}", file=sys.stderr)


def _log_section(title: str):
    """Print a section header to stderr if verbose mode is enabled."""
    if verbose_mode:
        print(f"\n{'=' * 60}", file=sys.stderr)
        print(f"[NODE] {title}", file=sys.stderr)
        print(f"{'=' * 60}", file=sys.stderr)


def _setting(state: AnalysisState, key: str):
    """State value, falling back to the pipeline configuration."""
    if key in state:
        return state[key]
    return getattr(config or SearchConfig(), key)


def _none_line(lines: list[str]) -> str:
    return "\n".join(lines) if lines else "  (none)"


def load_puzzle(state: AnalysisState) -> dict:
    """
    Parse the puzzle text into a basis and cube rows.
    Nets are kept as colorings; pair-only files have none.
    """
    _log_section("LOADING PUZZLE")

    pf = parse_puzzle(state["source"])
    colorings = pf.colorings() if pf.has_nets else None

    _log("\nOutput:", 1)
    _log(f"- Colors: {pf.basis}", 2)
    _log(f"- Cube rows: {len(pf.rows)}", 2)
    _log(f"- Nets: {'yes' if colorings is not None else 'no'}", 2)

    return {
        "puzzle_file": pf,
        "basis": pf.basis,
        "colorings": colorings,
    }


def check_proper(state: AnalysisState) -> dict:
    """
    Check that every cube shows every color and canonicalize the puzzle.
    """
    _log_section("CHECKING PROPER CUBES")

    pf = state["puzzle_file"]
    rows = pf.pair_rows()
    improper = [
        i
        for i, values in enumerate(rows, 1)
        if not cube_type_from_values(values, pf.basis).is_proper
    ]

    _log("\nRows:", 1)
    for i, values in enumerate(rows, 1):
        mark = "" if i not in improper else "  <- misses a color"
        _log(f"- cube {i}: {' '.join(map(str, values))}{mark}", 2)

    if improper and state.get("strict", True):
        raise ImproperRow(f"cubes {improper} do not show every color")

    puzzle = None
    if not improper:
        puzzle = pf.puzzle(_setting(state, "allow_repeats"))
        _log(f"\nCanonical puzzle: {puzzle}", 1)

    return {
        "proper": not improper,
        "improper_rows": improper,
        "puzzle": puzzle,
    }


def route_after_proper(
    state: AnalysisState,
) -> Literal["solve_tower", "solve_block_node", "write_report"]:
    """
    Routing function: towers are only solved for proper puzzles.
    """
    checks = state.get("checks", ["tower"])
    if state["proper"] and "tower" in checks:
        _log("\nRouting Decision: solve_tower", 1)
        return "solve_tower"
    if "block" in checks and not state.get("require_tower", False):
        _log("\nRouting Decision: solve_block_node", 1)
        _log(f"- Reason: proper={state['proper']}, block requested", 2)
        return "solve_block_node"
    _log("\nRouting Decision: write_report", 1)
    return "write_report"


def solve_tower(state: AnalysisState) -> dict:
    """
    Partial solutions, solution sets and the realization of the first solution.
    """
    _log_section("SOLVING TOWER")

    puzzle = state["puzzle"]
    l = _setting(state, "target_l")
    partials = partial_solutions(puzzle)
    solutions = solution_sets(puzzle, 2)
    sets = solutions if l == 2 else solution_sets(puzzle, l)
    realization = realize_tower(puzzle, solutions[0]) if solutions else None

    _log("\nOutput:", 1)
    _log(f"- Partial solutions: {len(partials)}", 2)
    _log(f"- Solutions: {len(solutions)}", 2)
    if l != 2:
        _log(f"- Solution sets (l={l}): {len(sets)}", 2)

    return {
        "partials": partials,
        "solutions": solutions,
        "solution_sets": sets,
        "realization": realization,
    }


def route_after_tower(state: AnalysisState) -> Literal["solve_block_node", "write_report"]:
    """
    Routing function: block after tower, or straight to the report.
    """
    if "block" not in state.get("checks", ["tower"]):
        return "write_report"
    if state.get("require_tower", False) and not state.get("solutions"):
        _log("\nRouting Decision: write_report", 1)
        _log("- Reason: no tower solution", 2)
        return "write_report"
    _log("\nRouting Decision: solve_block_node", 1)
    return "solve_block_node"


def solve_block_node(state: AnalysisState) -> dict:
    """
    All block placements of the four colorings.
    """
    _log_section("SOLVING BLOCK")

    colorings = state.get("colorings")
    if colorings is None:
        colorings = state["puzzle_file"].colorings()
    dedupe = _setting(state, "dedupe")
    placements = solve_block(colorings, dedupe=dedupe)

    _log("\nOutput:", 1)
    _log(f"- Placements: {len(placements)}{' (up to box symmetry)' if dedupe else ''}", 2)

    return {"placements": placements, "block_checked": True}


def _tower_section(state: AnalysisState) -> str:
    puzzle = state["puzzle"]
    basis = puzzle.basis
    partials = state["partials"]
    solutions = state["solutions"]

    partial_lines = [
        PARTIAL_LINE_TEMPLATE.format(
            index=i,
            cols=" ".join(map(str, p.cols)),
            entries=" ".join(map(str, p.entries(puzzle))),
            one_based=p.one_based(),
        )
        for i, p in enumerate(partials, 1)
    ]
    solution_lines = [
        SOLUTION_LINE_TEMPLATE.format(
            index=i,
            members=" + ".join(" ".join(map(str, m.cols)) for m in s.members),
        )
        for i, s in enumerate(solutions, 1)
    ]
    text = SOLVE_REPORT_TEMPLATE.format(
        puzzle=puzzle,
        magic=magic_number(basis).value(basis),
        partial_count=len(partials),
        partial_lines=_none_line(partial_lines),
        legend=INDEX_LEGEND,
        solution_count=len(solutions),
        solution_lines=_none_line(solution_lines),
        symmetry=symmetry_factor(puzzle.n),
    )

    l = _setting(state, "target_l")
    if l != 2:
        sets = state["solution_sets"]
        set_lines = [
            SOLUTION_LINE_TEMPLATE.format(
                index=i,
                members=" + ".join(" ".join(map(str, m.cols)) for m in s.members),
            )
            for i, s in enumerate(sets, 1)
        ]
        text += "\n" + SOLUTION_SETS_TEMPLATE.format(
            l=l, set_count=len(sets), set_lines=_none_line(set_lines)
        )

    realization = state.get("realization")
    if realization is not None:
        lines = [
            TOWER_LINE_TEMPLATE.format(
                index=i,
                front=c.front,
                back=c.back,
                left=c.left,
                right=c.right,
                top=c.top,
                bottom=c.bottom,
            )
            for i, c in enumerate(realization.cubes, 1)
        ]
        text += "\ntower (first solution):\n" + "\n".join(lines)
    return text


def _block_section(state: AnalysisState) -> str:
    basis = state["basis"]
    placements = state["placements"]
    lines = []
    for i, placement in enumerate(placements, 1):
        positions = " ".join(
            f"({x},{y}):cube{cube + 1}@r{rot}"
            for (x, y), cube, rot in placement_positions(placement)
        )
        faces = " ".join(f"{k}={v}" for k, v in placement.face_colors(basis).items())
        lines.append(PLACEMENT_LINE_TEMPLATE.format(index=i, positions=positions, faces=faces))
    note = " (up to box symmetry)" if _setting(state, "dedupe") else ""
    return BLOCK_REPORT_TEMPLATE.format(
        count=len(placements), note=note, placement_lines=_none_line(lines)
    )


def write_report(state: AnalysisState) -> dict:
    """
    Render the report from whatever the pipeline computed.
    """
    _log_section("WRITING REPORT")

    improper = state.get("improper_rows", [])
    proper = "yes" if not improper else f"no (cubes {', '.join(map(str, improper))})"
    sections = [
        HEADER_TEMPLATE.format(
            colors=state["basis"],
            cube_count=len(state["puzzle_file"].rows),
            proper=proper,
        )
    ]
    if state.get("partials") is not None and state.get("puzzle") is not None:
        sections.append(_tower_section(state))
    if state.get("block_checked"):
        sections.append(_block_section(state))
    report = "\n".join(sections) + "\n"

    _log("\nOutput:", 1)
    _log(f"- Report length: {len(report)} characters", 2)

    return {"report": report}
