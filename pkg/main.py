"""
Main entry point for the Insanity puzzle engine.

Usage:
    python main.py cubes -n 4
    python main.py solve puzzles/instant-insanity.puzzle
    python main.py census -n 5 --csv out.csv --threads 8
    python main.py block puzzles/mutando.puzzle --dedupe
    python main.py mutando
    python main.py render puzzles/max72-n4.puzzle
    python main.py solve puzzles/max18-n6.puzzle --verbose  # trace the pipeline
"""

import argparse
import sys

from dotenv import load_dotenv

from src.insanity import SearchConfig, get_report, run_analysis, verify_mutando
from src.insanity.block import mutando_search
from src.insanity.config import CENSUS_SUMMARY_TEMPLATE, resolve_threads
from src.insanity.enumerator import achievable_counts, census, enumerate_cube_types, write_witnesses
from src.insanity.errors import InsanityError
from src.insanity.model import ColorBasis, coloring_to_net
from src.insanity.textio import format_nets, nets_for, read_puzzle


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Insanity puzzles - tower solver, census and 2x2x1 block search"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Trace pipeline steps and progress on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def basis_size(p):
        p.add_argument(
            "-n",
            type=int,
            default=4,
            choices=(4, 5, 6),
            metavar="N",
            help="Number of colors and cubes (default: 4)",
        )

    def threads(p):
        p.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Worker processes (default: $INSANITY_THREADS or 1)",
        )

    p = sub.add_parser("cubes", parents=[common], help="List all cube types for n colors")
    basis_size(p)

    p = sub.add_parser("solve", parents=[common], help="Solve the tower for a puzzle file")
    p.add_argument("file", help="Puzzle file")
    p.add_argument(
        "-l",
        type=int,
        default=2,
        choices=(1, 2, 3),
        help="Solution set size to list (default: 2)",
    )
    p.add_argument("--allow-repeats", action="store_true", help="Accept repeated cube types")

    p = sub.add_parser("census", parents=[common], help="Count solutions of every puzzle for n colors")
    basis_size(p)
    threads(p)
    p.add_argument("--allow-repeats", action="store_true", help="Include puzzles with repeated cubes")
    p.add_argument("--csv", help="Write the histogram CSV here instead of stdout")
    p.add_argument("--witnesses", help="Directory for one example puzzle per solution count")

    p = sub.add_parser("block", parents=[common], help="Solve the 2x2x1 block for a file of four nets")
    p.add_argument("file", help="Puzzle file with net rows")
    p.add_argument("--dedupe", action="store_true", help="One placement per box symmetry class")

    p = sub.add_parser("mutando", parents=[common], help="Find cube sets solving both the tower and the block")
    threads(p)

    p = sub.add_parser("render", parents=[common], help="Draw the nets of a puzzle file")
    p.add_argument("file", help="Puzzle file")

    return parser


def run_cubes(args) -> None:
    for t in enumerate_cube_types(ColorBasis.standard(args.n)):
        print(t)


def run_solve(args) -> None:
    config = SearchConfig(target_l=args.l, allow_repeats=args.allow_repeats)
    text = _read_text(args.file)
    result = run_analysis(text, config, checks=("tower",), verbose=args.verbose)
    sys.stdout.write(get_report(result))


def run_census(args) -> None:
    config = SearchConfig(basis_size=args.n, threads=args.threads, allow_repeats=args.allow_repeats)
    threads = resolve_threads(config)
    basis = ColorBasis.standard(config.basis_size)
    _progress(args, f"census over colors {basis} with {threads} worker(s)")

    c = census(basis, config.allow_repeats, threads, config.chunks_per_thread)
    _progress(args, f"{c.total_puzzles} puzzles, {len(c.histogram)} distinct counts")

    if args.witnesses:
        paths = write_witnesses(c, args.witnesses)
        _progress(args, f"wrote {len(paths)} witness files to {args.witnesses}")
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as f:
            f.write(c.to_csv())
        achieved, gaps = achievable_counts(c)
        print(
            CENSUS_SUMMARY_TEMPLATE.format(
                n=c.n,
                total=c.total_puzzles,
                max_solutions=c.max_solutions,
                achieved=" ".join(map(str, achieved)),
                gaps=" ".join(map(str, gaps)) or "(none)",
            )
        )
    else:
        sys.stdout.write(c.to_csv())


def run_block(args) -> None:
    config = SearchConfig(dedupe=args.dedupe, allow_repeats=True)
    text = _read_text(args.file)
    result = run_analysis(text, config, checks=("block",), strict=False, verbose=args.verbose)
    sys.stdout.write(get_report(result))


def run_mutando(args) -> None:
    config = SearchConfig(threads=args.threads)
    threads = resolve_threads(config)
    basis = ColorBasis.standard(4)
    _progress(args, f"mutando search over colors {basis} with {threads} worker(s)")

    found = mutando_search(basis, threads, config.chunks_per_thread)
    verified = sum(1 for cubes in found if verify_mutando(cubes))
    print(f"# configurations: {len(found)}")
    for i, cubes in enumerate(found, 1):
        print()
        sys.stdout.write(
            format_nets(basis, [coloring_to_net(c) for c in cubes], comment=f"configuration {i}")
        )
    print()
    print(f"# verified: {verified}/{len(found)}")


def run_render(args) -> None:
    pf = read_puzzle(args.file)
    sys.stdout.write(format_nets(pf.basis, nets_for(pf)))


def _read_text(path: str) -> str:
    with open(path, encoding="ascii") as f:
        return f.read()


def _progress(args, message: str) -> None:
    if args.verbose:
        print(message, file=sys.stderr)


COMMANDS = {
    "cubes": run_cubes,
    "solve": run_solve,
    "census": run_census,
    "block": run_block,
    "mutando": run_mutando,
    "render": run_render,
}


def run(argv=None) -> int:
    """Run one subcommand; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        COMMANDS[args.command](args)
    except InsanityError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_status
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    return 0


def main():
    # Load environment variables from .env file
    load_dotenv()
    sys.exit(run())


if __name__ == "__main__":
    main()
