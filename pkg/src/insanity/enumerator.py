"""
Cube-type enumeration, puzzle enumeration and the solution-count census.

Puzzles over a basis are the n-combinations of the sorted cube-type list
(multiset combinations with ``allow_repeats``). The census splits the
combination space into contiguous colexicographic rank ranges; each range
is scanned by one worker and the partial results are merged in rank
order, so the output does not depend on the number of workers.

Inside a range, consecutive combinations in colex order share all
positions above the one that changed. The worker keeps the level tables
of ``tower.extend_level`` for every suffix and only rebuilds the ones
whose positions moved.
"""

import csv
import functools
import io
import itertools
import math
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Iterator

from .config import CENSUS_CSV_HEADER
from .model import ColorBasis, CubeType, Puzzle, pair_products
from .textio import format_puzzle
from .tower import CodeSpace, close_level, count_independent_pairs, extend_level

CSV_FIELDS = tuple(CENSUS_CSV_HEADER.split(","))


def enumerate_cube_types(basis: ColorBasis) -> list[CubeType]:
    """All proper multisets of three pair products, in canonical order."""
    return list(_cube_types(basis))


@functools.lru_cache(maxsize=None)
def _cube_types(basis: ColorBasis) -> tuple[CubeType, ...]:
    out = []
    for triple in itertools.combinations_with_replacement(pair_products(basis), 3):
        t = CubeType(triple)
        if t.is_proper:
            out.append(t)
    return tuple(sorted(out))


def _combinations(count: int, k: int, allow_repeats: bool) -> Iterator[tuple[int, ...]]:
    if allow_repeats:
        return itertools.combinations_with_replacement(range(count), k)
    return itertools.combinations(range(count), k)


def enumerate_puzzles(basis: ColorBasis, allow_repeats: bool = False) -> Iterator[Puzzle]:
    types = _cube_types(basis)
    for combo in _combinations(len(types), basis.n, allow_repeats):
        yield Puzzle(tuple(types[i] for i in combo), basis, allow_repeats)


def puzzle_count(basis: ColorBasis, allow_repeats: bool = False) -> int:
    t = len(_cube_types(basis))
    if allow_repeats:
        return math.comb(t + basis.n - 1, basis.n)
    return math.comb(t, basis.n)


# Colex ranking of strict k-combinations of range(m)


def colex_unrank(rank: int, k: int) -> list[int]:
    """The strict combination with the given colex rank."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        c = i
        while math.comb(c + 1, i + 1) <= rank:
            c += 1
        out[i] = c
        rank -= math.comb(c, i + 1)
    return out


def colex_rank(combo: list[int]) -> int:
    return sum(math.comb(c, i + 1) for i, c in enumerate(combo))


def colex_advance(combo: list[int]) -> int:
    """Step to the colex successor in place; returns the highest changed position."""
    k = len(combo)
    i = 0
    while i < k - 1 and combo[i] + 1 >= combo[i + 1]:
        i += 1
    combo[i] += 1
    for j in range(i):
        combo[j] = j
    return i


def rank_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    bounds = [total * p // parts for p in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


@dataclass(frozen=True)
class RangeTask:
    basis: ColorBasis
    allow_repeats: bool
    start: int
    stop: int


@dataclass
class RangeResult:
    histogram: dict[int, int] = field(default_factory=dict)
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)


def scan_range(task: RangeTask) -> RangeResult:
    """Count tower solutions for every puzzle whose rank lies in [start, stop)."""
    result = RangeResult()
    if task.start >= task.stop:
        return result
    basis = task.basis
    n = basis.n
    space = CodeSpace.for_size(n)
    codes = [t.codes for t in _cube_types(basis)]
    shift = 1 if task.allow_repeats else 0

    combo = colex_unrank(task.start, n)
    # multiset combinations map to strict ones by c'_k = c_k + k
    types = [c - shift * k for k, c in enumerate(combo)]
    levels: list = [None] * (n + 1)
    levels[n] = {0: [()]}
    for j in range(n - 1, 0, -1):
        levels[j] = extend_level(levels[j + 1], codes[types[j]], space)

    histogram = result.histogram
    witnesses = result.witnesses
    for rank in range(task.start, task.stop):
        if rank > task.start:
            changed = colex_advance(combo)
            for k in range(changed + 1):
                types[k] = combo[k] - shift * k
            for j in range(min(changed, n - 1), 0, -1):
                levels[j] = extend_level(levels[j + 1], codes[types[j]], space)
        selections = close_level(levels[1], codes[types[0]], space)
        s = count_independent_pairs(selections)
        histogram[s] = histogram.get(s, 0) + 1
        key = tuple(types)
        best = witnesses.get(s)
        if best is None or key < best:
            witnesses[s] = key
    return result


@dataclass
class Census:
    """Number of puzzles per tower-solution count."""

    n: int
    allow_repeats: bool
    total_puzzles: int
    histogram: dict[int, int]
    witnesses: dict[int, Puzzle]

    @property
    def max_solutions(self) -> int:
        return max(self.histogram)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for s in sorted(self.histogram):
            writer.writerow((self.n, s, self.histogram[s]))
        return buf.getvalue()


def merge_results(results: list[RangeResult]) -> RangeResult:
    merged = RangeResult()
    for r in results:
        for s, count in r.histogram.items():
            merged.histogram[s] = merged.histogram.get(s, 0) + count
        for s, key in r.witnesses.items():
            best = merged.witnesses.get(s)
            if best is None or key < best:
                merged.witnesses[s] = key
    return merged


def census(
    basis: ColorBasis,
    allow_repeats: bool = False,
    threads: int = 1,
    chunks_per_thread: int = 8,
) -> Census:
    total = puzzle_count(basis, allow_repeats)
    threads = max(1, threads)
    if threads == 1:
        results = [scan_range(RangeTask(basis, allow_repeats, 0, total))]
    else:
        tasks = [
            RangeTask(basis, allow_repeats, a, b)
            for a, b in rank_ranges(total, threads * chunks_per_thread)
        ]
        with multiprocessing.Pool(processes=threads) as pool:
            results = pool.map(scan_range, tasks)
    merged = merge_results(results)

    types = _cube_types(basis)
    witnesses = {
        s: Puzzle(tuple(types[i] for i in key), basis, allow_repeats)
        for s, key in sorted(merged.witnesses.items())
    }
    return Census(
        n=basis.n,
        allow_repeats=allow_repeats,
        total_puzzles=total,
        histogram=dict(sorted(merged.histogram.items())),
        witnesses=witnesses,
    )


def achievable_counts(c: Census) -> tuple[list[int], list[int]]:
    """(achieved counts, unachieved counts in [0, max])."""
    achieved = sorted(s for s, k in c.histogram.items() if k > 0)
    if not achieved:
        return [], []
    present = set(achieved)
    gaps = [m for m in range(0, achieved[-1] + 1) if m not in present]
    return achieved, gaps


def write_witnesses(c: Census, directory: str) -> list[str]:
    """One puzzle file per histogram bucket; returns the written paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for s, puzzle in c.witnesses.items():
        path = os.path.join(directory, f"n{c.n}-s{s}.puzzle")
        with open(path, "w", encoding="ascii") as f:
            f.write(format_puzzle(puzzle, comment=f"{s} solutions, smallest of {c.histogram[s]}"))
        paths.append(path)
    return paths
