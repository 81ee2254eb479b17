"""
Puzzle text files.

    # comment
    colors: 2 3 5 7
    net: 3 5 5 5 7 2
    pairs: 6 10 35

One ``colors:`` line, then one row per cube, either a net (six colors in
the order s1 s2 s3 s4 left right) or the three opposite-pair products.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParseError
from .model import (
    ColorBasis,
    CubeColoring,
    Net,
    Puzzle,
    canonicalize_puzzle,
    coloring_to_cube_type,
    coloring_to_net,
    cube_type_from_values,
    expand_colorings,
    net_to_coloring,
)


@dataclass(frozen=True)
class PuzzleRow:
    """One cube line of a puzzle file; exactly one of net/pairs is set."""

    line: int
    net: Optional[Net] = None
    pairs: Optional[tuple[int, int, int]] = None


@dataclass(frozen=True)
class PuzzleFile:
    basis: ColorBasis
    rows: tuple[PuzzleRow, ...]

    @property
    def has_nets(self) -> bool:
        return all(r.net is not None for r in self.rows)

    def colorings(self) -> list[CubeColoring]:
        """Canonical colorings of the cubes; needs every row to be a net."""
        if not self.has_nets:
            bad = [r.line for r in self.rows if r.net is None]
            raise ParseError(f"block solving needs net rows, lines {bad} give pairs only")
        return [net_to_coloring(r.net, self.basis) for r in self.rows]

    def pair_rows(self) -> list[tuple[int, int, int]]:
        """Opposite-pair products per row, in file order."""
        out = []
        for r in self.rows:
            if r.net is not None:
                t = coloring_to_cube_type(net_to_coloring(r.net, self.basis))
                out.append(t.values)
            else:
                out.append(r.pairs)
        return out

    def puzzle(self, allow_repeats: bool = False) -> Puzzle:
        return canonicalize_puzzle(self.pair_rows(), self.basis, allow_repeats)


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_puzzle(text: str) -> PuzzleFile:
    basis = None
    rows: list[PuzzleRow] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: values', got {line!r}")
        key = key.strip().lower()
        values = _ints(rest.split(), lineno)
        if key == "colors":
            if basis is not None:
                raise ParseError(f"line {lineno}: second colors line")
            basis = ColorBasis(tuple(values))
            continue
        if basis is None:
            raise ParseError(f"line {lineno}: cube row before the colors line")
        if key == "net":
            net = Net(tuple(values))
            for token in net.cells:
                basis.index(token)
            rows.append(PuzzleRow(lineno, net=net))
        elif key == "pairs":
            if len(values) != 3:
                raise ParseError(f"line {lineno}: pairs rows need 3 products, got {len(values)}")
            cube_type_from_values(values, basis)
            rows.append(PuzzleRow(lineno, pairs=tuple(values)))
        else:
            raise ParseError(f"line {lineno}: unknown row kind {key!r}")
    if basis is None:
        raise ParseError("missing colors line")
    if not rows:
        raise ParseError("no cube rows")
    return PuzzleFile(basis, tuple(rows))


def read_puzzle(path) -> PuzzleFile:
    with open(path, encoding="ascii") as f:
        return parse_puzzle(f.read())


# Writers


def format_puzzle(puzzle: Puzzle, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"colors: {puzzle.basis}")
    for cube in puzzle.cubes:
        lines.append(f"pairs: {cube}")
    return "\n".join(lines) + "\n"


def render_net(net: Net) -> list[str]:
    """ASCII drawing of a net: strip bottom-to-top, flaps beside s3."""
    width = max(len(str(c)) for c in net.cells)

    def cell(c: int) -> str:
        return f"[{c:>{width}}]"

    pad = " " * (width + 3)
    s1, s2, s3, s4 = net.strip
    return [
        pad + cell(s4),
        f"{cell(net.left)} {cell(s3)} {cell(net.right)}",
        pad + cell(s2),
        pad + cell(s1),
    ]


def format_nets(
    basis: ColorBasis,
    nets: Sequence[Net],
    comment: Optional[str] = None,
) -> str:
    """Puzzle text with net rows, each preceded by its drawing as comments."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"colors: {basis}")
    for i, net in enumerate(nets, 1):
        lines.append(f"# cube {i}")
        lines.extend(f"#   {row}" for row in render_net(net))
        lines.append("net: " + " ".join(str(c) for c in net.cells))
    return "\n".join(lines) + "\n"


def nets_for(pf: PuzzleFile) -> list[Net]:
    """Nets to draw for a file: given nets as-is, pair rows via their first coloring."""
    nets = []
    for r in pf.rows:
        if r.net is not None:
            nets.append(r.net)
        else:
            t = cube_type_from_values(r.pairs, pf.basis)
            nets.append(coloring_to_net(expand_colorings(t, pf.basis)[0]))
    return nets
