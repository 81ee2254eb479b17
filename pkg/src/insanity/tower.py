"""
Tower solver.

A partial solution picks one opposite pair (column) per cube so that the
picked pairs multiply to the magic number M = prod(p_i^2); it is one
opposite pair of long faces of the tower. Two partial solutions are
independent when they pick different columns on every cube, and a tower
solution is an unordered pair of independent partial solutions.

The search works on packed exponent vectors (see ``model.pack``) and
builds selections row by row from the last cube, dropping any partial sum
that already shows some color more than twice. The same level helpers are
reused by the census and the Mutando search.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadL, LengthMismatch, NotIndependent, UnsolvableTower
from .model import ColorBasis, ExponentVector, Puzzle, pack

Selection = tuple[int, ...]
Level = dict[int, list[Selection]]


def magic_number(basis: ColorBasis) -> ExponentVector:
    return ExponentVector((2,) * basis.n)


def symmetry_factor(n: int) -> int:
    """Cube orders times square symmetries of a solved n-cube tower."""
    return math.factorial(n) * 8


# Packed-code helpers


@dataclass(frozen=True)
class CodeSpace:
    """Constants for packed sums over an n-color basis."""

    magic: int
    probe: int
    high: int

    @classmethod
    def for_size(cls, n: int) -> "CodeSpace":
        # field + 5 sets bit 3 exactly when the field is 3 or more
        return cls(pack((2,) * n), pack((5,) * n), pack((8,) * n))

    def over(self, total: int) -> bool:
        return bool((total + self.probe) & self.high)


def extend_level(level: Level, codes: Sequence[int], space: CodeSpace) -> Level:
    """Prepend one cube to every selection of a suffix level."""
    out: Level = {}
    for total, tails in level.items():
        for col, code in enumerate(codes):
            s = total + code
            if space.over(s):
                continue
            bucket = out.get(s)
            if bucket is None:
                bucket = out[s] = []
            bucket.extend((col,) + t for t in tails)
    return out


def close_level(level: Level, codes: Sequence[int], space: CodeSpace) -> list[Selection]:
    """Selections for the first cube that complete a suffix level to M."""
    out: list[Selection] = []
    for col, code in enumerate(codes):
        tails = level.get(space.magic - code)
        if tails:
            out.extend((col,) + t for t in tails)
    return out


def scan_rows(code_rows: Sequence[Sequence[int]], space: CodeSpace) -> list[Selection]:
    level: Level = {0: [()]}
    for codes in reversed(code_rows[1:]):
        level = extend_level(level, codes, space)
    return close_level(level, code_rows[0], space)


def count_independent_pairs(selections: Sequence[Selection]) -> int:
    count = 0
    for a, b in itertools.combinations(selections, 2):
        if all(x != y for x, y in zip(a, b)):
            count += 1
    return count


# Public types


@dataclass(frozen=True, order=True)
class PartialSolution:
    """cols[i] is the column picked on cube i."""

    cols: Selection

    def entries(self, puzzle: Puzzle) -> tuple[int, ...]:
        return tuple(cube.values[c] for cube, c in zip(puzzle.cubes, self.cols))

    def one_based(self) -> str:
        """The (i, s_i) set with cubes and columns counted from 1."""
        return "{" + ", ".join(f"({i + 1},{c + 1})" for i, c in enumerate(self.cols)) + "}"


@dataclass(frozen=True, order=True)
class SolutionSet:
    """Pairwise independent partial solutions, sorted."""

    members: tuple[PartialSolution, ...]

    @property
    def l(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TowerCube:
    """Axis assignment of one cube in a realized tower (colors are primes)."""

    front_back: int
    left_right: int
    top_bottom: int
    front: int
    back: int
    left: int
    right: int
    top: int
    bottom: int


@dataclass(frozen=True)
class TowerRealization:
    solution: SolutionSet
    cubes: tuple[TowerCube, ...]

    def long_faces(self) -> dict[str, tuple[int, ...]]:
        return {
            "front": tuple(c.front for c in self.cubes),
            "back": tuple(c.back for c in self.cubes),
            "left": tuple(c.left for c in self.cubes),
            "right": tuple(c.right for c in self.cubes),
        }


# Operations


def partial_solutions(puzzle: Puzzle, method: str = "vector") -> list[PartialSolution]:
    """All column selections whose product is the magic number, sorted.

    ``method="vector"`` adds packed exponent vectors; ``method="integer"``
    multiplies the pair values and compares with M directly.
    """
    if method == "vector":
        space = CodeSpace.for_size(puzzle.basis.n)
        found = sorted(scan_rows([cube.codes for cube in puzzle.cubes], space))
    elif method == "integer":
        target = magic_number(puzzle.basis).value(puzzle.basis)
        rows = puzzle.rows
        found = [
            cols
            for cols in itertools.product(range(3), repeat=len(rows))
            if math.prod(row[c] for row, c in zip(rows, cols)) == target
        ]
    else:
        raise ValueError(f"unknown method {method!r}")
    return [PartialSolution(cols) for cols in found]


def independent(u: PartialSolution, v: PartialSolution) -> bool:
    if len(u.cols) != len(v.cols):
        raise LengthMismatch(f"partial solutions of length {len(u.cols)} and {len(v.cols)}")
    return all(a != b for a, b in zip(u.cols, v.cols))


def solution_sets(puzzle: Puzzle, l: int = 2) -> list[SolutionSet]:
    if not 1 <= l <= 3:
        raise BadL(f"l must be 1, 2 or 3, got {l}")
    partials = partial_solutions(puzzle)
    out = []
    for combo in itertools.combinations(partials, l):
        if all(independent(u, v) for u, v in itertools.combinations(combo, 2)):
            out.append(SolutionSet(combo))
    return out


def count_solutions(puzzle: Puzzle) -> int:
    space = CodeSpace.for_size(puzzle.basis.n)
    return count_independent_pairs(scan_rows([cube.codes for cube in puzzle.cubes], space))


def _orient(edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Orient a 2-regular multigraph so every color is in front exactly once.

    Each cycle starts at its lowest unused edge with the smaller color
    forward.
    """
    oriented: list = [None] * len(edges)
    for start, (a, b) in enumerate(edges):
        if oriented[start] is not None:
            continue
        oriented[start] = (a, b)
        first, current = a, b
        while current != first:
            try:
                nxt = next(
                    i for i, e in enumerate(edges) if oriented[i] is None and current in e
                )
            except StopIteration:
                raise UnsolvableTower("selected pairs do not close into cycles") from None
            x, y = edges[nxt]
            other = y if x == current else x
            oriented[nxt] = (current, other)
            current = other
    return oriented


def _is_partial(puzzle: Puzzle, sel: PartialSolution) -> bool:
    total = ExponentVector.zero(puzzle.basis.n)
    for cube, c in zip(puzzle.cubes, sel.cols):
        total = total + cube.pairs[c].ev
    return total == magic_number(puzzle.basis)


def realize_tower(puzzle: Puzzle, s: SolutionSet) -> TowerRealization:
    """Axis assignment per cube: first member front/back, second left/right."""
    if s.l != 2:
        raise BadL(f"a tower needs a 2-element solution set, got {s.l}")
    first, second = s.members
    if not independent(first, second):
        raise NotIndependent(f"{first.one_based()} and {second.one_based()} share an entry")
    for member in s.members:
        if len(member.cols) != puzzle.n or not _is_partial(puzzle, member):
            raise UnsolvableTower(f"{member.one_based()} is not a partial solution")

    primes = puzzle.basis.primes
    fb = _orient([puzzle.cubes[i].pairs[c].colors for i, c in enumerate(first.cols)])
    lr = _orient([puzzle.cubes[i].pairs[c].colors for i, c in enumerate(second.cols)])
    cubes = []
    for i, cube in enumerate(puzzle.cubes):
        tb_col = 3 - first.cols[i] - second.cols[i]
        top, bottom = cube.pairs[tb_col].colors
        cubes.append(
            TowerCube(
                front_back=first.cols[i],
                left_right=second.cols[i],
                top_bottom=tb_col,
                front=primes[fb[i][0]],
                back=primes[fb[i][1]],
                left=primes[lr[i][0]],
                right=primes[lr[i][1]],
                top=primes[top],
                bottom=primes[bottom],
            )
        )
    realization = TowerRealization(s, tuple(cubes))
    for name, colors in realization.long_faces().items():
        if sorted(colors) != list(primes):
            raise UnsolvableTower(f"{name} face shows {colors}")
    return realization


def solve(puzzle: Puzzle, l: int = 2) -> tuple[list[PartialSolution], list[SolutionSet]]:
    return partial_solutions(puzzle), solution_sets(puzzle, l)


def tower_solvable(code_rows: Iterable[Sequence[int]], space: CodeSpace) -> bool:
    return count_independent_pairs(scan_rows(list(code_rows), space)) > 0
