from typing import Sequence

from langgraph.graph import END, START, StateGraph

from .config import SearchConfig
from .model import CubeColoring, coloring_to_net
from .nodes import (
    check_proper,
    init_pipeline,
    load_puzzle,
    route_after_proper,
    route_after_tower,
    solve_block_node,
    solve_tower,
    write_report,
)
from .state import AnalysisState
from .textio import format_nets


def create_graph(config: SearchConfig = None, verbose: bool = False):
    """
    Create and compile the analysis graph.

    Args:
        config: Optional run configuration
        verbose: Whether to trace every node on stderr

    Returns:
        Compiled StateGraph ready to invoke
    """
    init_pipeline(config, verbose=verbose)

    graph = StateGraph(AnalysisState)

    graph.add_node("load_puzzle", load_puzzle)
    graph.add_node("check_proper", check_proper)
    graph.add_node("solve_tower", solve_tower)
    graph.add_node("solve_block_node", solve_block_node)
    graph.add_node("write_report", write_report)

    graph.add_edge(START, "load_puzzle")
    graph.add_edge("load_puzzle", "check_proper")

    # Improper puzzles have no tower; the block may still be asked for
    graph.add_conditional_edges(
        "check_proper",
        route_after_proper,
        {
            "solve_tower": "solve_tower",
            "solve_block_node": "solve_block_node",
            "write_report": "write_report",
        },
    )
    graph.add_conditional_edges(
        "solve_tower",
        route_after_tower,
        {
            "solve_block_node": "solve_block_node",
            "write_report": "write_report",
        },
    )
    graph.add_edge("solve_block_node", "write_report")
    graph.add_edge("write_report", END)

    return graph.compile()


def run_analysis(
    text: str,
    config: SearchConfig = None,
    checks: Sequence[str] = ("tower",),
    strict: bool = True,
    require_tower: bool = False,
    verbose: bool = False,
) -> dict:
    """
    Run the check chain on one puzzle text.

    Args:
        text: Puzzle file contents
        config: Optional configuration (allow_repeats, target_l, dedupe)
        checks: "tower" and/or "block"
        strict: Raise ImproperRow instead of reporting improper cubes
        require_tower: Only solve the block when the tower has a solution

    Returns:
        Final state including the report
    """
    config = config or SearchConfig()
    graph = create_graph(config, verbose=verbose)

    initial_state = {
        "source": text,
        "checks": list(checks),
        "strict": strict,
        "require_tower": require_tower,
        "allow_repeats": config.allow_repeats,
        "target_l": config.target_l,
        "dedupe": config.dedupe,
    }
    return graph.invoke(initial_state)


def get_report(result: dict) -> str:
    """Extract the report from the result state."""
    return result.get("report") or "No report generated."


def verify_mutando(cubes: Sequence[CubeColoring], verbose: bool = False) -> bool:
    """Re-check proper, tower-solvable and block-solvable through the pipeline."""
    basis = cubes[0].basis
    text = format_nets(basis, [coloring_to_net(c) for c in cubes])
    result = run_analysis(
        text,
        SearchConfig(basis_size=basis.n, allow_repeats=True),
        checks=("tower", "block"),
        strict=False,
        require_tower=True,
        verbose=verbose,
    )
    return bool(result.get("proper") and result.get("solutions") and result.get("placements"))
