"""
Tests for the LangGraph definition.
"""

import pytest

from src.insanity.config import SearchConfig
from src.insanity.errors import ImproperRow, ParseError
from src.insanity.graph import create_graph, get_report, run_analysis, verify_mutando
from src.insanity.model import ColorBasis, Net, net_to_coloring


class TestCreateGraph:
    """Tests for create_graph function."""

    def test_graph_is_created(self):
        """Test that graph is created successfully."""
        graph = create_graph(SearchConfig())
        assert graph is not None

    def test_graph_created_with_verbose_true(self):
        """Test that graph can be created with verbose=True."""
        graph = create_graph(SearchConfig(), verbose=True)
        assert graph is not None
        create_graph(SearchConfig(), verbose=False)


class TestRunAnalysis:
    """Tests for run_analysis."""

    def test_instant_insanity(self, instant_insanity_text):
        """Test the tower report of Instant Insanity."""
        result = run_analysis(instant_insanity_text)
        lines = get_report(result).splitlines()

        assert "partial solutions: 3" in lines
        assert "solutions: 1" in lines
        assert len(result["solutions"]) == 1

    def test_deterministic_report(self, instant_insanity_text):
        """Test that two runs give identical reports."""
        first = get_report(run_analysis(instant_insanity_text))
        second = get_report(run_analysis(instant_insanity_text))
        assert first == second

    def test_improper_is_an_error(self, mutando_text):
        """Test that solving the original Mutando tower fails."""
        with pytest.raises(ImproperRow):
            run_analysis(mutando_text)

    def test_block_on_improper_cubes(self, mutando_text):
        """Test that the original Mutando still solves the block."""
        result = run_analysis(mutando_text, checks=("block",), strict=False)

        assert result["proper"] is False
        assert result["placements"]
        assert "partials" not in result or result["partials"] is None

    def test_block_needs_nets(self):
        """Test that pair rows cannot be placed in the block."""
        text = "colors: 2 3 5 7\npairs: 6 10 35\npairs: 6 14 15\npairs: 9 14 35\npairs: 14 15 25\n"
        with pytest.raises(ParseError):
            run_analysis(text, checks=("block",), strict=False)

    def test_mutando_chain(self, mutando_of_insanity_text):
        """Test proper, tower and block together."""
        result = run_analysis(
            mutando_of_insanity_text,
            SearchConfig(dedupe=True),
            checks=("tower", "block"),
            require_tower=True,
        )

        assert result["proper"] is True
        assert len(result["solutions"]) == 1
        assert result["placements"]
        assert "block placements:" in get_report(result)


class TestGetReport:
    """Tests for get_report helper function."""

    def test_extracts_report(self):
        """Test that the report field is returned."""
        assert get_report({"report": "text\n"}) == "text\n"

    def test_handles_missing_report(self):
        """Test handling of a state without a report."""
        assert get_report({}) == "No report generated."


class TestVerifyMutando:
    """Tests for verify_mutando."""

    def test_mutando_of_insanity_passes(self, load_colorings):
        """Test the published four cubes."""
        assert verify_mutando(load_colorings("mutando-of-insanity"))

    def test_original_mutando_fails(self, load_colorings):
        """Test that improper cubes fail the chain."""
        assert not verify_mutando(load_colorings("mutando"))

    def test_no_tower_fails(self):
        """Test four copies of one cube that has no tower."""
        basis = ColorBasis.standard(4)
        # opposite pairs 14 21 35: every selection shows 7 four times
        cube = net_to_coloring(Net((2, 3, 7, 7, 5, 7)), basis)
        assert not verify_mutando([cube] * 4)
