"""
Pytest fixtures and configuration for tests.
"""

from pathlib import Path

import pytest

from src.insanity.model import ColorBasis
from src.insanity.textio import read_puzzle

PUZZLES = Path(__file__).resolve().parent.parent / "puzzles"


def puzzle_path(name: str) -> Path:
    return PUZZLES / f"{name}.puzzle"


@pytest.fixture
def b4():
    return ColorBasis.standard(4)


@pytest.fixture
def b5():
    return ColorBasis.standard(5)


@pytest.fixture
def b6():
    return ColorBasis.standard(6)


@pytest.fixture
def load():
    """Canonical puzzle from a file in puzzles/."""

    def _load(name: str, allow_repeats: bool = False):
        return read_puzzle(puzzle_path(name)).puzzle(allow_repeats)

    return _load


@pytest.fixture
def load_colorings():
    """Colorings from a net file in puzzles/, in file order."""

    def _load(name: str):
        return read_puzzle(puzzle_path(name)).colorings()

    return _load


@pytest.fixture
def instant_insanity(load):
    return load("instant-insanity")


@pytest.fixture
def max72(load):
    return load("max72-n4")


@pytest.fixture
def instant_insanity_text():
    return puzzle_path("instant-insanity").read_text()


@pytest.fixture
def mutando_text():
    return puzzle_path("mutando").read_text()


@pytest.fixture
def mutando_of_insanity_text():
    return puzzle_path("mutando-of-insanity").read_text()


@pytest.fixture
def path_of():
    return puzzle_path
