"""Unit tests for canonical labelling and isomorphism."""

import pytest

from cyclepack.exceptions import BudgetExceededError
from cyclepack.families import complete_graph, cycle_graph, petersen_graph, y1_graph, y2_graph
from cyclepack.graph import Graph, complement, disjoint_union
from cyclepack.isomorphism import canonical_form, canonical_graph, is_isomorphic


class TestCanonicalForm:
    """Test the canonical form."""

    def test_relabelling_invariant(self):
        """Test relabelled copies share a canonical form."""
        graph = y1_graph()
        relabelled = graph.relabel([9, 3, 7, 1, 0, 8, 2, 6, 4, 5])
        assert canonical_form(graph) == canonical_form(relabelled)

    def test_empty_graph(self):
        """Test the graph without vertices."""
        assert canonical_form(Graph(0)) == (0, ())

    def test_form_is_cached(self):
        """Test the form is stored on the instance."""
        graph = cycle_graph(5)
        first = canonical_form(graph)
        assert canonical_form(graph) is first

    def test_canonical_graph_is_isomorphic(self):
        """Test the canonical relabelling is a copy of the input."""
        graph = petersen_graph()
        assert is_isomorphic(canonical_graph(graph), graph)

    def test_budget(self, tight_budgets):
        """Test the leaf budget is enforced."""
        with pytest.raises(BudgetExceededError) as exc_info:
            canonical_form(petersen_graph(), tight_budgets)
        assert exc_info.value.budget == "canonical_leaves"


class TestIsIsomorphic:
    """Test isomorphism decisions."""

    def test_relabelled_y1(self):
        """Test Y₁ and a relabelled Y₁ are isomorphic."""
        assert is_isomorphic(y1_graph(), y1_graph().relabel(list(reversed(range(10)))))

    def test_y1_y2_differ(self):
        """Test Y₁ and Y₂ are not isomorphic."""
        assert not is_isomorphic(y1_graph(), y2_graph())

    def test_c6_and_two_triangles_differ(self):
        """Test C₆ and 2K₃ share degrees but are not isomorphic."""
        two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
        assert not is_isomorphic(cycle_graph(6), two_triangles)

    def test_c5_is_self_complementary(self):
        """Test C₅ ≅ complement(C₅)."""
        assert is_isomorphic(cycle_graph(5), complement(cycle_graph(5)))

    def test_different_orders(self):
        """Test graphs of different order are rejected cheaply."""
        assert not is_isomorphic(cycle_graph(5), cycle_graph(6))
