"""
Face slots, the 24-element cube rotation group and the 16 symmetries of
the 2x2x1 box.

Rotations are built as signed axis permutation matrices with determinant
+1 and then translated into permutations of the six face slots. The table
order is fixed (lexicographic over matrix rows), so rotation indices are
stable and can be printed in reports.
"""

import itertools
from dataclasses import dataclass
from enum import IntEnum

Matrix3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
Vector3 = tuple[int, int, int]


class Face(IntEnum):
    """Oriented face slots of a cube; values index face tuples."""

    UP = 0
    DOWN = 1
    FRONT = 2
    BACK = 3
    LEFT = 4
    RIGHT = 5


# Outward normals: x to the right, y to the back, z up.
FACE_NORMALS: dict[Face, Vector3] = {
    Face.UP: (0, 0, 1),
    Face.DOWN: (0, 0, -1),
    Face.FRONT: (0, -1, 0),
    Face.BACK: (0, 1, 0),
    Face.LEFT: (-1, 0, 0),
    Face.RIGHT: (1, 0, 0),
}
NORMAL_TO_FACE: dict[Vector3, Face] = {v: f for f, v in FACE_NORMALS.items()}

OPPOSITE: dict[Face, Face] = {
    Face.UP: Face.DOWN,
    Face.DOWN: Face.UP,
    Face.FRONT: Face.BACK,
    Face.BACK: Face.FRONT,
    Face.LEFT: Face.RIGHT,
    Face.RIGHT: Face.LEFT,
}

# The three opposite-face axes in cube-type order: front/back, up/down,
# left/right.
AXES: tuple[tuple[Face, Face], ...] = (
    (Face.FRONT, Face.BACK),
    (Face.UP, Face.DOWN),
    (Face.LEFT, Face.RIGHT),
)

# The 12 unordered pairs of faces sharing an edge, in fixed order.
EDGES: tuple[tuple[Face, Face], ...] = tuple(
    (a, b) for a, b in itertools.combinations(Face, 2) if OPPOSITE[a] != b
)


def det3(m: Matrix3) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def mat_mul(a: Matrix3, b: Matrix3) -> Matrix3:
    rows = []
    for r in range(3):
        rows.append(tuple(sum(a[r][k] * b[k][c] for k in range(3)) for c in range(3)))
    return (rows[0], rows[1], rows[2])


def mat_vec(m: Matrix3, v: Vector3) -> Vector3:
    x, y, z = v
    return (
        m[0][0] * x + m[0][1] * y + m[0][2] * z,
        m[1][0] * x + m[1][1] * y + m[1][2] * z,
        m[2][0] * x + m[2][1] * y + m[2][2] * z,
    )


def signed_permutation_matrices() -> list[Matrix3]:
    """All 48 signed axis permutation matrices, sorted."""
    axes = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    mats: list[Matrix3] = []
    for perm in itertools.permutations(axes, 3):
        for signs in itertools.product([1, -1], repeat=3):
            rows = [tuple(signs[r] * x for x in perm[r]) for r in range(3)]
            mats.append((rows[0], rows[1], rows[2]))
    return sorted(set(mats))


def face_permutation(m: Matrix3) -> tuple[int, ...]:
    """perm[f] is the slot that the sticker on slot f moves to under m."""
    return tuple(int(NORMAL_TO_FACE[mat_vec(m, FACE_NORMALS[f])]) for f in Face)


@dataclass(frozen=True)
class Rotation:
    """One rigid motion of the cube, as a matrix and as a slot permutation."""

    matrix: Matrix3
    perm: tuple[int, ...]

    @property
    def gather(self) -> tuple[int, ...]:
        """src[g] = slot whose sticker lands on slot g."""
        src = [0] * 6
        for f, g in enumerate(self.perm):
            src[g] = f
        return tuple(src)

    def apply(self, faces: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * 6
        for f, g in enumerate(self.perm):
            out[g] = faces[f]
        return tuple(out)


class RotationGroup:
    """The 24 proper rotations of the cube with composition tables."""

    def __init__(self, rotations: tuple[Rotation, ...]):
        self.rotations = rotations
        self._index = {r.matrix: i for i, r in enumerate(rotations)}
        size = len(rotations)
        self.compose_table = tuple(
            tuple(
                self._index[mat_mul(rotations[i].matrix, rotations[j].matrix)]
                for j in range(size)
            )
            for i in range(size)
        )
        self.identity = self._index[((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        self.inverse_table = tuple(
            next(j for j in range(size) if self.compose_table[i][j] == self.identity)
            for i in range(size)
        )
        self._gathers = tuple(r.gather for r in rotations)

    @classmethod
    def build(cls) -> "RotationGroup":
        mats = [m for m in signed_permutation_matrices() if det3(m) == 1]
        if len(mats) != 24:
            raise AssertionError(f"expected 24 proper rotations, got {len(mats)}")
        return cls(tuple(Rotation(m, face_permutation(m)) for m in mats))

    def __len__(self) -> int:
        return len(self.rotations)

    def __getitem__(self, index: int) -> Rotation:
        return self.rotations[index]

    def compose(self, i: int, j: int) -> int:
        """Index of "apply j, then i"."""
        return self.compose_table[i][j]

    def inverse(self, i: int) -> int:
        return self.inverse_table[i]

    def order(self, i: int) -> int:
        k, acc = 1, i
        while acc != self.identity:
            acc = self.compose(i, acc)
            k += 1
        return k

    def index_of(self, matrix: Matrix3) -> int:
        return self._index[matrix]

    def orbit(self, faces: tuple[int, ...]) -> list[tuple[int, ...]]:
        """The 24 rotated face tuples, in table order."""
        return [tuple(faces[s] for s in src) for src in self._gathers]


ROTATIONS = RotationGroup.build()


# 2x2x1 box

# Grid positions in the order used by block placements.
POSITIONS: tuple[tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class PrismSymmetry:
    """A symmetry of the 2x2x1 box: position map plus face-direction map."""

    matrix: Matrix3
    perm: tuple[int, ...]
    position_map: tuple[int, ...]

    @property
    def proper(self) -> bool:
        return det3(self.matrix) == 1


def _position_map(m: Matrix3) -> tuple[int, ...]:
    out = []
    for i, j in POSITIONS:
        x, y, _ = mat_vec(m, (2 * i - 1, 2 * j - 1, 0))
        out.append(POSITIONS.index(((x + 1) // 2, (y + 1) // 2)))
    return tuple(out)


def prism_symmetries() -> tuple[PrismSymmetry, ...]:
    """The 16 signed axis permutations that keep the vertical axis vertical."""
    syms = []
    for m in signed_permutation_matrices():
        if m[2][2] == 0:
            continue
        syms.append(PrismSymmetry(m, face_permutation(m), _position_map(m)))
    return tuple(syms)


PRISM_SYMMETRIES = prism_symmetries()
