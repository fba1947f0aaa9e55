"""Unit tests for graph enumeration and random streams."""

import networkx as nx
import pytest

from cyclepack.enumeration import enumerate_graphs, random_graph_stream
from cyclepack.exceptions import EnumerationLimitError, InvalidParameterError
from cyclepack.families import complete_graph
from cyclepack.graph import Graph
from cyclepack.isomorphism import canonical_form, is_isomorphic


class TestEnumerateGraphs:
    """Test isomorph-free enumeration."""

    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n, expected):
        """Test the number of isomorphism classes on n vertices."""
        assert sum(1 for _ in enumerate_graphs(n)) == expected

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_matches_graph_atlas(self, n):
        """Test the classes agree with the networkx graph atlas."""
        atlas = [Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
        expected = {canonical_form(g)[1] for g in atlas}
        assert {canonical_form(g)[1] for g in enumerate_graphs(n)} == expected

    def test_no_duplicates(self):
        """Test every class is produced once."""
        forms = [canonical_form(g)[1] for g in enumerate_graphs(5)]
        assert len(forms) == len(set(forms))

    def test_min_degree_via_complement(self):
        """Test δ ≥ 2 on three vertices leaves only K₃."""
        graphs = list(enumerate_graphs(3, min_degree=2))
        assert len(graphs) == 1
        assert is_isomorphic(graphs[0], complete_graph(3))

    def test_min_degree_three_on_four(self):
        """Test δ ≥ 3 on four vertices leaves only K₄."""
        graphs = list(enumerate_graphs(4, min_degree=3))
        assert [g.edge_count for g in graphs] == [6]

    def test_max_degree(self):
        """Test Δ ≤ 2 on four vertices leaves seven classes."""
        graphs = list(enumerate_graphs(4, max_degree=2))
        assert len(graphs) == 7
        assert all(max(g.degrees) <= 2 for g in graphs)

    def test_unsatisfiable_degree(self):
        """Test δ ≥ n yields nothing."""
        assert list(enumerate_graphs(3, min_degree=3)) == []

    def test_predicate(self):
        """Test the extra filter is applied."""
        graphs = list(enumerate_graphs(4, predicate=lambda g: g.edge_count == 3))
        assert len(graphs) == 3

    def test_order_is_deterministic(self):
        """Test two runs produce the same sequence."""
        assert list(enumerate_graphs(5)) == list(enumerate_graphs(5))

    def test_sorted_by_edge_count(self):
        """Test output is ordered by edge count."""
        counts = [g.edge_count for g in enumerate_graphs(5)]
        assert counts == sorted(counts)

    def test_unbounded_limit(self):
        """Test unbounded enumeration stops at eight vertices."""
        with pytest.raises(EnumerationLimitError, match="graph6 stream"):
            next(enumerate_graphs(9))

    def test_bounded_limit(self):
        """Test degree-bounded enumeration stops at ten vertices."""
        with pytest.raises(EnumerationLimitError):
            next(enumerate_graphs(11, min_degree=5))

    def test_negative_n(self):
        """Test negative n is rejected."""
        with pytest.raises(InvalidParameterError):
            next(enumerate_graphs(-1))


class TestRandomGraphStream:
    """Test seeded random graph streams."""

    def test_reproducible(self):
        """Test the same seed gives the same stream."""
        first = list(random_graph_stream(5, (6, 9), seed=7))
        second = list(random_graph_stream(5, (6, 9), seed=7))
        assert first == second

    def test_count_and_sizes(self):
        """Test count and vertex range are honoured."""
        graphs = list(random_graph_stream(10, (4, 6), seed=3))
        assert len(graphs) == 10
        assert all(4 <= g.n <= 6 for g in graphs)

    def test_extreme_probabilities(self):
        """Test p = 0 and p = 1 give empty and complete graphs."""
        assert all(g.edge_count == 0 for g in random_graph_stream(3, (5, 5), edge_probability=0.0))
        full = random_graph_stream(3, (5, 5), edge_probability=1.0)
        assert all(g == complete_graph(5) for g in full)

    def test_probability_range(self):
        """Test a probability range is accepted."""
        assert len(list(random_graph_stream(4, (5, 7), edge_probability=(0.3, 0.9)))) == 4

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"count": -1, "n_range": (3, 4)},
            {"count": 1, "n_range": (5, 4)},
            {"count": 1, "n_range": (3, 4), "edge_probability": 1.5},
        ],
    )
    def test_invalid_parameters(self, kwargs):
        """Test invalid stream parameters raise on first use."""
        with pytest.raises(InvalidParameterError):
            next(random_graph_stream(**kwargs))
