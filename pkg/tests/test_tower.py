"""
Tests for the tower solver.
"""

import itertools
import math
import random

import pytest

from src.insanity.errors import BadL, LengthMismatch, NotIndependent, UnsolvableTower
from src.insanity.model import ColorBasis, canonicalize_puzzle, relabel
from src.insanity.textio import parse_puzzle
from src.insanity.tower import (
    PartialSolution,
    SolutionSet,
    count_solutions,
    independent,
    magic_number,
    partial_solutions,
    realize_tower,
    solution_sets,
    symmetry_factor,
)


class TestMagicNumber:
    """Tests for magic_number and symmetry_factor."""

    def test_four_colors(self, b4):
        """Test M for 2, 3, 5, 7."""
        assert magic_number(b4).value(b4) == 44100

    def test_five_colors(self, b5):
        """Test M for five colors."""
        assert magic_number(b5).value(b5) == 5336100

    def test_two_colors(self):
        """Test M for 2, 3."""
        basis = ColorBasis((2, 3))
        assert magic_number(basis).value(basis) == 36

    def test_all_twos(self, b6):
        """Test the exponent view."""
        assert magic_number(b6).exps == (2,) * 6

    @pytest.mark.parametrize("n,expected", [(4, 192), (5, 960), (6, 5760)])
    def test_symmetry_factor(self, n, expected):
        """Test n! * 8."""
        assert symmetry_factor(n) == expected == math.factorial(n) * 8


class TestPartialSolutions:
    """Tests for partial_solutions."""

    def test_instant_insanity(self, instant_insanity):
        """Test the three partial solutions of Instant Insanity."""
        cols = [p.cols for p in partial_solutions(instant_insanity)]
        assert cols == [(0, 1, 2, 1), (0, 2, 2, 0), (2, 0, 1, 1)]

    def test_max72_has_25(self, max72):
        """Test the 25 partial solutions of the 72-solution puzzle."""
        assert len(partial_solutions(max72)) == 25

    def test_repeated_cube(self, b4):
        """Test four 4 9 35 cubes: 4, 9 once each and 35 twice, in 12 orders."""
        p = canonicalize_puzzle([(4, 9, 35)] * 4, b4, allow_repeats=True)
        partials = partial_solutions(p)
        assert len(partials) == 12
        assert all(sorted(s.cols) == [0, 1, 2, 2] for s in partials)
        assert partials == partial_solutions(p, method="integer")

    def test_no_selection_reaches_magic(self, b4):
        """Test three 14 21 35 cubes: every choice already shows 7 three times."""
        p = canonicalize_puzzle([(14, 21, 35)] * 3 + [(6, 10, 49)], b4, allow_repeats=True)
        assert partial_solutions(p) == []
        assert count_solutions(p) == 0

    def test_methods_agree(self, instant_insanity, max72, load):
        """Test that integer and vector scans give identical lists."""
        for p in (instant_insanity, max72, load("max18-n6"), load("unique-n5")):
            assert partial_solutions(p) == partial_solutions(p, method="integer")

    def test_every_column_vector_checked(self, max72):
        """Test the result against the product of every one of the 81 selections."""
        basis = max72.basis
        target = magic_number(basis).value(basis)
        expected = [
            cols
            for cols in itertools.product(range(3), repeat=4)
            if math.prod(row[c] for row, c in zip(max72.rows, cols)) == target
        ]
        assert [p.cols for p in partial_solutions(max72)] == expected

    def test_unknown_method(self, instant_insanity):
        """Test that only the two scans are offered."""
        with pytest.raises(ValueError):
            partial_solutions(instant_insanity, method="graph")

    def test_one_based_notation(self):
        """Test the (i, s_i) rendering."""
        assert PartialSolution((0, 2, 1)).one_based() == "{(1,1), (2,3), (3,2)}"


class TestIndependent:
    """Tests for independent."""

    def test_self_is_not_independent(self):
        """Test irreflexivity."""
        u = PartialSolution((0, 1, 2, 0))
        assert not independent(u, u)

    def test_differs_everywhere(self):
        """Test two selections that differ in every row."""
        assert independent(PartialSolution((0, 1, 2, 0)), PartialSolution((1, 2, 0, 1)))

    def test_symmetric(self, max72):
        """Test symmetry over all pairs of the 72-solution puzzle."""
        partials = partial_solutions(max72)
        for u, v in itertools.product(partials, repeat=2):
            assert independent(u, v) == independent(v, u)

    def test_length_mismatch(self):
        """Test that different lengths are refused."""
        with pytest.raises(LengthMismatch):
            independent(PartialSolution((0, 1)), PartialSolution((1, 2, 0)))

    def test_instant_insanity_pairs(self, instant_insanity):
        """Test that exactly one pair of the three partial solutions is independent."""
        a, b, c = partial_solutions(instant_insanity)
        assert not independent(a, b)
        assert not independent(a, c)
        assert independent(b, c)


class TestSolutionSets:
    """Tests for solution_sets and count_solutions."""

    def test_instant_insanity_has_one_solution(self, instant_insanity):
        """Test the single solution of Instant Insanity."""
        sets = solution_sets(instant_insanity)
        assert len(sets) == 1
        assert [m.cols for m in sets[0].members] == [(0, 2, 2, 0), (2, 0, 1, 1)]
        assert count_solutions(instant_insanity) == 1

    def test_max72(self, max72):
        """Test the 72 solutions."""
        assert len(solution_sets(max72, 2)) == 72
        assert count_solutions(max72) == 72

    @pytest.mark.parametrize(
        "name,expected",
        [
            ("unique-n4", 1),
            ("unique-n5", 1),
            ("max18-n5", 18),
            ("max18-n6", 18),
            ("mutando-of-insanity", 1),
        ],
    )
    def test_library_puzzles(self, load, name, expected):
        """Test the solution counts of the shipped puzzles."""
        assert count_solutions(load(name)) == expected

    def test_corrected_six_color_print(self, path_of):
        """Test that repairing the misprinted fifth cube leaves no solution."""
        text = path_of("unique-n6-as-printed").read_text()
        fixed = parse_puzzle(text.replace("net: 2 5 13 7 5 11", "net: 2 3 13 7 5 11")).puzzle()

        assert fixed.rows == (
            (14, 39, 55),
            (15, 22, 91),
            (15, 26, 77),
            (21, 26, 55),
            (22, 35, 39),
            (26, 33, 35),
        )
        assert count_solutions(fixed) == 0

    @pytest.mark.parametrize(
        "name,partials",
        [("unique-n4", 4), ("unique-n5", 4), ("max18-n5", 13), ("max18-n6", 9), ("mutando-of-insanity", 3)],
    )
    def test_library_partial_counts(self, load, name, partials):
        """Test the partial-solution counts of the shipped puzzles."""
        assert len(partial_solutions(load(name))) == partials

    def test_singletons(self, max72):
        """Test that l=1 gives one set per partial solution."""
        assert len(solution_sets(max72, 1)) == len(partial_solutions(max72))

    def test_bounded_by_pairs(self, max72, instant_insanity):
        """Test that solutions never exceed the number of pairs of partials."""
        for p in (max72, instant_insanity):
            v = len(partial_solutions(p))
            assert count_solutions(p) <= math.comb(v, 2)

    def test_triples_are_pairwise_independent(self, max72):
        """Test the l=3 sets."""
        for s in solution_sets(max72, 3):
            assert s.l == 3
            for u, v in itertools.combinations(s.members, 2):
                assert independent(u, v)

    @pytest.mark.parametrize("l", [0, 4])
    def test_bad_l(self, instant_insanity, l):
        """Test that l must be 1, 2 or 3."""
        with pytest.raises(BadL):
            solution_sets(instant_insanity, l)

    def test_invariant_under_row_and_entry_order(self, b4, max72):
        """Test that shuffling rows and entries keeps the count."""
        rng = random.Random(3)
        for _ in range(10):
            rows = [tuple(rng.sample(r, 3)) for r in rng.sample(list(max72.rows), 4)]
            assert count_solutions(canonicalize_puzzle(rows, b4)) == 72

    def test_invariant_under_relabeling(self, load):
        """Test that every permutation of the colors keeps the count."""
        p = load("unique-n4")
        primes = p.basis.primes
        for perm in itertools.permutations(primes):
            assert count_solutions(relabel(p, dict(zip(primes, perm)))) == 1


class TestRealizeTower:
    """Tests for realize_tower."""

    def test_instant_insanity_long_faces(self, instant_insanity):
        """Test that each long face shows every color once."""
        s = solution_sets(instant_insanity)[0]
        tower = realize_tower(instant_insanity, s)
        for colors in tower.long_faces().values():
            assert sorted(colors) == [2, 3, 5, 7]

    def test_axis_columns_are_distinct(self, max72):
        """Test that the three axes use the three columns of every cube."""
        for s in solution_sets(max72):
            tower = realize_tower(max72, s)
            for c in tower.cubes:
                assert {c.front_back, c.left_right, c.top_bottom} == {0, 1, 2}

    def test_pairs_match_cube_types(self, load):
        """Test that every axis shows an opposite pair of its cube."""
        p = load("max18-n6")
        for s in solution_sets(p):
            tower = realize_tower(p, s)
            for cube, c in zip(p.cubes, tower.cubes):
                assert c.front * c.back == cube.values[c.front_back]
                assert c.left * c.right == cube.values[c.left_right]
                assert c.top * c.bottom == cube.values[c.top_bottom]

    def test_colliding_members(self, instant_insanity):
        """Test that dependent members are refused."""
        a, b, _ = partial_solutions(instant_insanity)
        with pytest.raises(NotIndependent):
            realize_tower(instant_insanity, SolutionSet((a, b)))

    def test_not_partial_solutions(self, instant_insanity):
        """Test that independent selections off the magic number are refused."""
        s = SolutionSet((PartialSolution((0, 0, 0, 0)), PartialSolution((1, 1, 1, 1))))
        with pytest.raises(UnsolvableTower):
            realize_tower(instant_insanity, s)

    def test_needs_two_members(self, instant_insanity):
        """Test that a tower takes exactly two partial solutions."""
        with pytest.raises(BadL):
            realize_tower(instant_insanity, solution_sets(instant_insanity, 1)[0])
