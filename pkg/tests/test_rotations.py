"""
Tests for the rotation group and the box symmetries.
"""

import itertools

from src.insanity.rotations import (
    EDGES,
    OPPOSITE,
    POSITIONS,
    PRISM_SYMMETRIES,
    ROTATIONS,
    Face,
    det3,
    mat_mul,
    signed_permutation_matrices,
)


class TestRotationGroup:
    """Tests for the 24-element rotation table."""

    def test_has_24_rotations(self):
        """Test the group size."""
        assert len(ROTATIONS) == 24

    def test_all_matrices_are_proper(self):
        """Test that every rotation has determinant +1."""
        assert all(det3(r.matrix) == 1 for r in ROTATIONS.rotations)

    def test_closed_under_composition(self):
        """Test closure over the full 24x24 table."""
        matrices = {r.matrix for r in ROTATIONS.rotations}
        for a, b in itertools.product(ROTATIONS.rotations, repeat=2):
            assert mat_mul(a.matrix, b.matrix) in matrices

    def test_identity_is_neutral(self):
        """Test that composing with the identity changes nothing."""
        e = ROTATIONS.identity
        for i in range(24):
            assert ROTATIONS.compose(e, i) == i
            assert ROTATIONS.compose(i, e) == i

    def test_inverse_table(self):
        """Test that every element composed with its inverse is the identity."""
        for i in range(24):
            j = ROTATIONS.inverse(i)
            assert ROTATIONS.compose(i, j) == ROTATIONS.identity
            assert ROTATIONS.compose(j, i) == ROTATIONS.identity

    def test_element_orders(self):
        """Test orders: 1 identity, 9 of order 2, 8 of order 3, 6 of order 4."""
        orders = sorted(ROTATIONS.order(i) for i in range(24))
        assert set(orders) <= {1, 2, 3, 4}
        assert orders.count(1) == 1
        assert orders.count(2) == 9
        assert orders.count(3) == 8
        assert orders.count(4) == 6

    def test_composition_matches_face_action(self):
        """Test that compose(i, j) acts on faces as j followed by i."""
        faces = (0, 1, 2, 3, 4, 5)
        for i, j in itertools.product(range(24), repeat=2):
            k = ROTATIONS.compose(i, j)
            assert ROTATIONS[k].apply(faces) == ROTATIONS[i].apply(ROTATIONS[j].apply(faces))

    def test_rotations_keep_opposite_faces_opposite(self):
        """Test that opposite slots stay opposite under every rotation."""
        for r in ROTATIONS.rotations:
            for f in Face:
                assert r.perm[OPPOSITE[f]] == OPPOSITE[Face(r.perm[f])]

    def test_orbit_of_distinct_faces_has_24_elements(self):
        """Test that a fully distinct coloring has a free orbit."""
        assert len(set(ROTATIONS.orbit((0, 1, 2, 3, 4, 5)))) == 24

    def test_orbit_agrees_with_apply(self):
        """Test that orbit lists the rotated tuples in table order."""
        faces = (0, 0, 1, 2, 3, 3)
        orbit = ROTATIONS.orbit(faces)
        for i, r in enumerate(ROTATIONS.rotations):
            assert orbit[i] == r.apply(faces)


class TestEdges:
    """Tests for the edge table."""

    def test_twelve_edges(self):
        """Test that a cube has 12 edges."""
        assert len(EDGES) == 12

    def test_every_face_has_four_edges(self):
        """Test that each face meets four others."""
        for f in Face:
            assert sum(f in e for e in EDGES) == 4

    def test_no_edge_joins_opposite_faces(self):
        """Test that no edge pairs a face with its opposite."""
        assert all(OPPOSITE[a] != b for a, b in EDGES)


class TestPrismSymmetries:
    """Tests for the 16 symmetries of the 2x2x1 box."""

    def test_sixteen_symmetries(self):
        """Test the group size."""
        assert len(PRISM_SYMMETRIES) == 16

    def test_half_are_rotations(self):
        """Test that 8 symmetries are proper rotations."""
        assert sum(s.proper for s in PRISM_SYMMETRIES) == 8

    def test_position_maps_are_permutations(self):
        """Test that every symmetry permutes the four grid positions."""
        for s in PRISM_SYMMETRIES:
            assert sorted(s.position_map) == list(range(len(POSITIONS)))

    def test_vertical_axis_is_kept(self):
        """Test that up and down stay on the vertical axis."""
        for s in PRISM_SYMMETRIES:
            assert {s.perm[Face.UP], s.perm[Face.DOWN]} == {Face.UP, Face.DOWN}

    def test_is_subset_of_signed_permutations(self):
        """Test that the box symmetries come from the 48 signed permutations."""
        mats = set(signed_permutation_matrices())
        assert len(mats) == 48
        assert all(s.matrix in mats for s in PRISM_SYMMETRIES)
