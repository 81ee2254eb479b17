"""
The 2x2x1 block puzzle and the joint tower/block (Mutando) search.

Four cubes sit at grid positions (0,0), (1,0), (0,1), (1,1) of a 2x2x1
box; x grows to the right and y to the back. Every cube shows its up and
down faces plus the two side faces on the outside of its corner:

    (0,0) left, front     (1,0) right, front
    (0,1) left, back      (1,1) right, back

A placement solves the block when each of the six box faces is one color.
The search is a plain backtrack over cube order and the 24 orientations
of every cube, with cube 0 pinned to position (0,0).
"""

import itertools
import math
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Sequence

from .enumerator import enumerate_cube_types, rank_ranges
from .errors import WrongArity, WrongCount
from .model import ColorBasis, CubeColoring, PairProduct, coloring_to_cube_type, expand_colorings
from .rotations import EDGES, POSITIONS, PRISM_SYMMETRIES, ROTATIONS, Face
from .tower import CodeSpace, tower_solvable

# Side faces each grid position shows, besides up and down.
EXPOSED_SIDES: tuple[tuple[Face, Face], ...] = (
    (Face.LEFT, Face.FRONT),
    (Face.RIGHT, Face.FRONT),
    (Face.LEFT, Face.BACK),
    (Face.RIGHT, Face.BACK),
)

PRISM_FACES = ("up", "down", "front", "back", "left", "right")


@dataclass(frozen=True)
class EdgePairProfile:
    """Products of the two colors across each of the 12 cube edges."""

    products: tuple[PairProduct, ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(pp.value for pp in self.products)

    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.values))


def edge_pair_profile(c: CubeColoring) -> EdgePairProfile:
    return EdgePairProfile(tuple(c.basis.pair(c.color(a) * c.color(b)) for a, b in EDGES))


@dataclass(frozen=True)
class BlockPlacement:
    """cube_ids[p] sits at POSITIONS[p] turned by rotation rotations[p]."""

    cube_ids: tuple[int, int, int, int]
    rotations: tuple[int, int, int, int]
    faces: tuple[tuple[int, ...], ...]

    def prism_faces(self) -> dict[str, tuple[int, ...]]:
        """Color indices of the exposed stickers on each box face."""
        up = tuple(f[Face.UP] for f in self.faces)
        down = tuple(f[Face.DOWN] for f in self.faces)
        sides: dict[Face, list[int]] = {}
        for p, f in enumerate(self.faces):
            for side in EXPOSED_SIDES[p]:
                sides.setdefault(side, []).append(f[side])
        return {
            "up": up,
            "down": down,
            "front": tuple(sides[Face.FRONT]),
            "back": tuple(sides[Face.BACK]),
            "left": tuple(sides[Face.LEFT]),
            "right": tuple(sides[Face.RIGHT]),
        }

    def face_colors(self, basis: ColorBasis) -> dict[str, int]:
        return {name: basis.primes[stickers[0]] for name, stickers in self.prism_faces().items()}

    def orbit_key(self) -> tuple:
        """Smallest image of the arrangement under the 16 box symmetries."""
        best = None
        for sym in PRISM_SYMMETRIES:
            world: list = [None] * 4
            for p, (cube, faces) in enumerate(zip(self.cube_ids, self.faces)):
                moved = [0] * 6
                for f, g in enumerate(sym.perm):
                    moved[g] = faces[f]
                world[sym.position_map[p]] = (cube, tuple(moved))
            key = tuple(world)
            if best is None or key < best:
                best = key
        return best


def verify_placement(placement: BlockPlacement) -> bool:
    return all(len(set(stickers)) == 1 for stickers in placement.prism_faces().values())


def _check_cubes(cubes: Sequence[CubeColoring]) -> None:
    if len(cubes) != 4:
        raise WrongCount(f"the block needs exactly 4 cubes, got {len(cubes)}")
    if len({c.basis for c in cubes}) != 1:
        raise WrongArity("block cubes use different color bases")
    if cubes[0].basis.n != 4:
        raise WrongArity(f"the block needs a 4-color basis, got {cubes[0].basis.n} colors")


def _placements(cubes: Sequence[CubeColoring]) -> Iterator[BlockPlacement]:
    orbits = [ROTATIONS.orbit(c.faces) for c in cubes]
    U, D, F, B, L, R = Face.UP, Face.DOWN, Face.FRONT, Face.BACK, Face.LEFT, Face.RIGHT

    for r0, f0 in enumerate(orbits[0]):
        up, down, front, left = f0[U], f0[D], f0[F], f0[L]
        for c1 in (1, 2, 3):
            for r1, f1 in enumerate(orbits[c1]):
                if f1[U] != up or f1[D] != down or f1[F] != front:
                    continue
                right = f1[R]
                rest = [c for c in (1, 2, 3) if c != c1]
                for c2, c3 in (rest, rest[::-1]):
                    for r2, f2 in enumerate(orbits[c2]):
                        if f2[U] != up or f2[D] != down or f2[L] != left:
                            continue
                        back = f2[B]
                        for r3, f3 in enumerate(orbits[c3]):
                            if f3[U] == up and f3[D] == down and f3[R] == right and f3[B] == back:
                                yield BlockPlacement(
                                    (0, c1, c2, c3),
                                    (r0, r1, r2, r3),
                                    (f0, f1, f2, f3),
                                )


def solve_block(cubes: Sequence[CubeColoring], dedupe: bool = False) -> list[BlockPlacement]:
    """All placements with monochrome box faces, in search order.

    With ``dedupe`` one placement per orbit of the box symmetry group is
    kept (the first one found).
    """
    _check_cubes(cubes)
    found = list(_placements(cubes))
    if not dedupe:
        return found
    seen = set()
    out = []
    for placement in found:
        key = placement.orbit_key()
        if key not in seen:
            seen.add(key)
            out.append(placement)
    return out


def block_solvable(cubes: Sequence[CubeColoring]) -> bool:
    _check_cubes(cubes)
    return next(_placements(cubes), None) is not None


# Mutando search


def coloring_pool(basis: ColorBasis) -> list[CubeColoring]:
    """Every coloring, up to rotation, that shows all colors of the basis."""
    seen: dict[tuple[int, ...], CubeColoring] = {}
    for t in enumerate_cube_types(basis):
        for c in expand_colorings(t, basis):
            seen.setdefault(c.faces, c)
    return [seen[k] for k in sorted(seen)]


def tower_check(cubes: Sequence[CubeColoring]) -> bool:
    space = CodeSpace.for_size(cubes[0].basis.n)
    return tower_solvable((coloring_to_cube_type(c).codes for c in cubes), space)


def mutando_candidate(cubes: Sequence[CubeColoring]) -> bool:
    """Proper cubes, a tower solution and a block solution."""
    if not all(coloring_to_cube_type(c).is_proper for c in cubes):
        return False
    return tower_check(cubes) and block_solvable(cubes)


@dataclass(frozen=True)
class MutandoTask:
    value: int
    start: int
    stop: int


# Worker globals (set by init_worker)
pool: list[CubeColoring] = []
pair_values: list[frozenset] = []
groups: dict[int, list[int]] = {}


def init_worker(basis: ColorBasis) -> None:
    """Build the coloring pool and the shared-pair groups for this process."""
    global pool, pair_values, groups
    pool = coloring_pool(basis)
    pair_values = [frozenset(coloring_to_cube_type(c).values) for c in pool]
    groups = {}
    for i, values in enumerate(pair_values):
        for v in values:
            groups.setdefault(v, []).append(i)
    groups = dict(sorted(groups.items()))


def scan_group(task: MutandoTask) -> list[tuple[int, ...]]:
    """4-sets in one shared-pair group, in the given combination rank range.

    A block solution needs one opposite pair (up/down) common to all four
    cubes; each 4-set is visited only in the group of its smallest common
    pair value.
    """
    members = groups[task.value]
    hits = []
    combos = itertools.islice(itertools.combinations(members, 4), task.start, task.stop)
    for combo in combos:
        common = frozenset.intersection(*(pair_values[i] for i in combo))
        if min(common) < task.value:
            continue
        cubes = [pool[i] for i in combo]
        if tower_check(cubes) and block_solvable(cubes):
            hits.append(combo)
    return hits


def mutando_tasks(chunks: int) -> list[MutandoTask]:
    tasks = []
    for v, members in groups.items():
        total = math.comb(len(members), 4)
        for a, b in rank_ranges(total, chunks):
            tasks.append(MutandoTask(v, a, b))
    return tasks


def mutando_search(
    basis: ColorBasis,
    threads: int = 1,
    chunks_per_thread: int = 8,
) -> list[tuple[CubeColoring, ...]]:
    """All 4-sets of pool colorings solving both the tower and the block."""
    if basis.n != 4:
        raise WrongArity(f"the Mutando search needs 4 colors, got {basis.n}")
    init_worker(basis)
    threads = max(1, threads)
    if threads == 1:
        results = [scan_group(t) for t in mutando_tasks(1)]
    else:
        tasks = mutando_tasks(threads * chunks_per_thread)
        with multiprocessing.Pool(processes=threads, initializer=init_worker, initargs=(basis,)) as workers:
            results = workers.map(scan_group, tasks)
    hits = sorted(combo for part in results for combo in part)
    return [tuple(pool[i] for i in combo) for combo in hits]


def placement_positions(placement: BlockPlacement) -> list[tuple[tuple[int, int], int, int]]:
    return [(POSITIONS[p], placement.cube_ids[p], placement.rotations[p]) for p in range(4)]
