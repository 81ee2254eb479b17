"""
Core model of Insanity puzzles.

Colors are the primes of a ``ColorBasis``. A pair of opposite faces is a
``PairProduct`` (the product of two basis primes), a cube is reduced to its
``CubeType`` (the unordered triple of its opposite-pair products) and a
puzzle is a canonical list of cube types. Every product is available twice:
as an integer and as an exponent vector over the basis; the two views must
always agree.

Full colorings (``CubeColoring``) keep adjacency and are only needed for
the block puzzle.
"""

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .errors import DuplicateCube, ImproperRow, UnknownColor, WrongArity
from .rotations import AXES, ROTATIONS, Face

# Packed exponent vectors: one 4-bit field per color. Every sum that the
# solvers form stays below 16 per field.
FIELD_BITS = 4


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    return all(value % d for d in range(2, math.isqrt(value) + 1))


def first_primes(n: int) -> tuple[int, ...]:
    out: list[int] = []
    candidate = 2
    while len(out) < n:
        if is_prime(candidate):
            out.append(candidate)
        candidate += 1
    return tuple(out)


@dataclass(frozen=True)
class ColorBasis:
    """Ordered set of distinct primes standing for the n colors."""

    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if len(primes) < 2:
            raise WrongArity(f"a basis needs at least 2 colors, got {len(primes)}")
        for p in primes:
            if not is_prime(p):
                raise UnknownColor(f"{p} is not prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise UnknownColor(f"basis must be strictly increasing: {primes}")

    @classmethod
    def standard(cls, n: int) -> "ColorBasis":
        """B4 = (2,3,5,7), B5 adds 11, B6 adds 13; larger n continues the primes."""
        return cls(first_primes(n))

    @property
    def n(self) -> int:
        return len(self.primes)

    @property
    def product(self) -> int:
        return math.prod(self.primes)

    def index(self, prime: int) -> int:
        try:
            return self.primes.index(prime)
        except ValueError:
            raise UnknownColor(f"{prime} is not a color of basis {self.primes}") from None

    def pair(self, value: int) -> "PairProduct":
        """Look up the pair product with the given integer value."""
        table = _pair_table(self)
        if value not in table:
            raise UnknownColor(f"{value} is not a product of two colors of {self.primes}")
        return table[value]

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.primes)


@dataclass(frozen=True)
class ExponentVector:
    """Multiplicity of each basis color in a product."""

    exps: tuple[int, ...]

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if len(self.exps) != len(other.exps):
            raise WrongArity("exponent vectors of different length")
        return ExponentVector(tuple(a + b for a, b in zip(self.exps, other.exps)))

    @classmethod
    def zero(cls, n: int) -> "ExponentVector":
        return cls((0,) * n)

    @property
    def total(self) -> int:
        return sum(self.exps)

    def value(self, basis: ColorBasis) -> int:
        return math.prod(p ** e for p, e in zip(basis.primes, self.exps))

    @property
    def code(self) -> int:
        return pack(self.exps)


def pack(exps: Sequence[int]) -> int:
    return sum(e << (FIELD_BITS * i) for i, e in enumerate(exps))


@dataclass(frozen=True, order=True)
class PairProduct:
    """Two colors on opposite faces; ordered and compared by value."""

    value: int
    ev: ExponentVector = field(compare=False)

    @property
    def colors(self) -> tuple[int, int]:
        """Indices of the two colors, smaller first."""
        idx = [i for i, e in enumerate(self.ev.exps) for _ in range(e)]
        return (idx[0], idx[1])

    @property
    def code(self) -> int:
        return self.ev.code


def pair_products(basis: ColorBasis) -> list[PairProduct]:
    """All n(n+1)/2 products of two basis primes, ascending."""
    return list(_pair_list(basis))


@functools.lru_cache(maxsize=None)
def _pair_list(basis: ColorBasis) -> tuple[PairProduct, ...]:
    out = []
    n = basis.n
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        exps = [0] * n
        exps[i] += 1
        exps[j] += 1
        out.append(PairProduct(basis.primes[i] * basis.primes[j], ExponentVector(tuple(exps))))
    out.sort()
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _pair_table(basis: ColorBasis) -> dict[int, PairProduct]:
    return {pp.value: pp for pp in _pair_list(basis)}


@dataclass(frozen=True, order=True)
class CubeType:
    """A cube seen through its three opposite-face pairs, sorted ascending."""

    pairs: tuple[PairProduct, PairProduct, PairProduct]

    def __post_init__(self):
        pairs = tuple(sorted(self.pairs))
        if len(pairs) != 3:
            raise WrongArity(f"a cube type has 3 pairs, got {len(pairs)}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def values(self) -> tuple[int, int, int]:
        return tuple(pp.value for pp in self.pairs)

    @property
    def coverage(self) -> ExponentVector:
        a, b, c = (pp.ev for pp in self.pairs)
        return a + b + c

    @property
    def row_product(self) -> int:
        return math.prod(self.values)

    @property
    def is_proper(self) -> bool:
        return all(e >= 1 for e in self.coverage.exps)

    def is_proper_by_product(self, basis: ColorBasis) -> bool:
        return self.row_product % basis.product == 0

    def is_proper_by_faces(self) -> bool:
        faces = {c for pp in self.pairs for c in pp.colors}
        return len(faces) == len(self.coverage.exps)

    @property
    def codes(self) -> tuple[int, int, int]:
        return tuple(pp.code for pp in self.pairs)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


@dataclass(frozen=True, order=True)
class Puzzle:
    """Canonical representative of an equivalence class of proper matrices."""

    cubes: tuple[CubeType, ...]
    basis: ColorBasis = field(compare=False)
    allow_repeats: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.cubes)

    @property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(c.values for c in self.cubes)

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ", ".join(map(str, r)) + "}" for r in self.rows) + ")"


RawRow = Sequence[Union[int, PairProduct]]


def _to_pair(basis: ColorBasis, entry: Union[int, PairProduct]) -> PairProduct:
    if isinstance(entry, PairProduct):
        return entry
    return basis.pair(int(entry))


def canonicalize_puzzle(
    rows: Sequence[RawRow],
    basis: ColorBasis,
    allow_repeats: bool = False,
) -> Puzzle:
    """Sort within rows, then rows; validate properness and distinctness."""
    if len(rows) != basis.n:
        raise WrongArity(f"expected {basis.n} cubes for {basis.n} colors, got {len(rows)}")
    cubes = []
    for i, row in enumerate(rows, 1):
        if len(row) != 3:
            raise WrongArity(f"row {i}: expected 3 pair products, got {len(row)}")
        cube = CubeType(tuple(_to_pair(basis, e) for e in row))
        if not cube.is_proper:
            missing = [basis.primes[k] for k, e in enumerate(cube.coverage.exps) if e == 0]
            raise ImproperRow(f"row {i} ({cube}) misses colors {missing}")
        cubes.append(cube)
    cubes.sort()
    if not allow_repeats:
        for a, b in zip(cubes, cubes[1:]):
            if a == b:
                raise DuplicateCube(f"cube type {a} appears more than once")
    return Puzzle(tuple(cubes), basis, allow_repeats)


def relabel(puzzle: Puzzle, mapping: Mapping[int, int]) -> Puzzle:
    """Apply a permutation of basis primes to every entry and re-canonicalize."""
    basis = puzzle.basis
    if sorted(mapping) != list(basis.primes) or sorted(mapping.values()) != list(basis.primes):
        raise UnknownColor("relabeling must permute the basis primes")
    rows = []
    for cube in puzzle.cubes:
        row = []
        for pp in cube.pairs:
            a, b = pp.colors
            row.append(mapping[basis.primes[a]] * mapping[basis.primes[b]])
        rows.append(row)
    return canonicalize_puzzle(rows, basis, puzzle.allow_repeats)


# Full colorings


@dataclass(frozen=True, order=True)
class CubeColoring:
    """Colors (basis indices) on the six face slots, in ``Face`` order."""

    faces: tuple[int, ...]
    basis: ColorBasis = field(compare=False)

    def __post_init__(self):
        faces = tuple(self.faces)
        if len(faces) != 6:
            raise WrongArity(f"a coloring has 6 faces, got {len(faces)}")
        for c in faces:
            if not 0 <= c < self.basis.n:
                raise UnknownColor(f"color index {c} outside basis of size {self.basis.n}")
        object.__setattr__(self, "faces", faces)

    def color(self, face: Face) -> int:
        """Prime on the given face slot."""
        return self.basis.primes[self.faces[face]]

    @property
    def key(self) -> tuple[int, ...]:
        """Lexicographic minimum over the 24 rotations."""
        return min(ROTATIONS.orbit(self.faces))

    def canonical(self) -> "CubeColoring":
        return CubeColoring(self.key, self.basis)

    def same_cube(self, other: "CubeColoring") -> bool:
        return self.key == other.key

    def rotated(self, index: int) -> "CubeColoring":
        return CubeColoring(ROTATIONS[index].apply(self.faces), self.basis)

    def __str__(self) -> str:
        return " ".join(str(self.color(f)) for f in Face)


@dataclass(frozen=True)
class Net:
    """Unfolded cube: strip s1..s4 read bottom-to-top, flaps on s3."""

    cells: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        cells = tuple(int(c) for c in self.cells)
        if len(cells) != 6:
            raise WrongArity(f"a net has 6 cells, got {len(cells)}")
        object.__setattr__(self, "cells", cells)

    @property
    def strip(self) -> tuple[int, int, int, int]:
        return self.cells[:4]

    @property
    def left(self) -> int:
        return self.cells[4]

    @property
    def right(self) -> int:
        return self.cells[5]


# Net cell order (s1, s2, s3, s4, left, right) folded onto face slots.
NET_SLOTS = (Face.FRONT, Face.UP, Face.BACK, Face.DOWN, Face.LEFT, Face.RIGHT)


def net_to_coloring(net: Net, basis: ColorBasis) -> CubeColoring:
    faces = [0] * 6
    for slot, token in zip(NET_SLOTS, net.cells):
        faces[slot] = basis.index(token)
    return CubeColoring(tuple(faces), basis).canonical()


def coloring_to_net(c: CubeColoring) -> Net:
    return Net(tuple(c.color(slot) for slot in NET_SLOTS))


def coloring_to_cube_type(c: CubeColoring) -> CubeType:
    pairs = []
    n = c.basis.n
    for a, b in AXES:
        exps = [0] * n
        exps[c.faces[a]] += 1
        exps[c.faces[b]] += 1
        pairs.append(PairProduct(c.color(a) * c.color(b), ExponentVector(tuple(exps))))
    return CubeType(tuple(pairs))


def expand_colorings(t: CubeType, basis: ColorBasis) -> list[CubeColoring]:
    """All rotation classes of colorings whose opposite pairs are ``t``."""
    seen: dict[tuple[int, ...], CubeColoring] = {}
    for order in itertools.permutations(t.pairs):
        for flips in itertools.product((False, True), repeat=3):
            faces = [0] * 6
            for (a, b), pp, flip in zip(AXES, order, flips):
                x, y = pp.colors
                if flip:
                    x, y = y, x
                faces[a], faces[b] = x, y
            coloring = CubeColoring(tuple(faces), basis).canonical()
            seen.setdefault(coloring.faces, coloring)
    return [seen[k] for k in sorted(seen)]


def cube_type_from_values(values: Iterable[int], basis: ColorBasis) -> CubeType:
    return CubeType(tuple(basis.pair(v) for v in values))
