"""Unit tests for equitable colorings and triangle partitions."""

import pytest

from cyclepack.equitable import (
    EquitableColoring,
    equitable_coloring,
    has_k_triangle_partition,
    theta,
)
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    y1_graph,
)
from cyclepack.graph import Graph, complement, disjoint_union
from cyclepack.models import Verdict


class TestEquitableColoring:
    """Test equitable coloring search."""

    def test_edgeless(self):
        """Test K̄₆ splits into three pairs."""
        coloring = equitable_coloring(empty_graph(6), 3)
        assert coloring is not None
        assert coloring.sizes == [2, 2, 2]

    def test_cycle(self):
        """Test C₉ has an equitable 3-coloring."""
        graph = cycle_graph(9)
        coloring = equitable_coloring(graph, 3)
        assert coloring is not None
        assert coloring.sizes == [3, 3, 3]
        assert coloring.is_valid(graph)

    def test_uneven_sizes(self):
        """Test sizes differ by at most one when r does not divide n."""
        graph = cycle_graph(7)
        coloring = equitable_coloring(graph, 3)
        assert coloring is not None
        assert coloring.sizes == [3, 2, 2]
        assert coloring.is_valid(graph)

    def test_clique_needs_more_colors(self):
        """Test K₄ has no 3-coloring at all."""
        assert equitable_coloring(complete_graph(4), 3) is None

    def test_proper_but_not_equitable(self):
        """Test K₃,₃ + K₃ is 3-colorable but not equitably."""
        graph = disjoint_union(complete_bipartite(3, 3), complete_graph(3))
        assert equitable_coloring(graph, 3) is None

    def test_more_classes_than_vertices(self):
        """Test surplus classes stay empty."""
        coloring = equitable_coloring(complete_graph(3), 5)
        assert coloring is not None
        assert coloring.sizes == [1, 1, 1, 0, 0]

    def test_empty_graph(self):
        """Test the graph without vertices gets r empty classes."""
        coloring = equitable_coloring(Graph(0), 2)
        assert coloring is not None
        assert coloring.sizes == [0, 0]

    def test_invalid_r(self):
        """Test r must be positive."""
        with pytest.raises(InvalidParameterError):
            equitable_coloring(cycle_graph(5), 0)

    def test_class_count_checked(self):
        """Test a coloring must have exactly r classes."""
        with pytest.raises(InvalidParameterError):
            EquitableColoring((frozenset({0}),), 2)

    def test_is_valid_rejects_adjacent_class(self):
        """Test a class containing an edge is invalid."""
        coloring = EquitableColoring((frozenset({0, 1}), frozenset({2})), 2)
        assert not coloring.is_valid(complete_graph(3))


class TestTheta:
    """Test the maximum Ore-degree."""

    def test_complete_graph(self):
        """Test θ(K₄) = 6."""
        assert theta(complete_graph(4)) == 6

    def test_complement_identity(self):
        """Test θ(Ḡ) = 2n − σ₂(G) − 2 on Y₁."""
        assert theta(complement(y1_graph())) == 9

    def test_edgeless(self):
        """Test edgeless graphs have θ = −∞."""
        assert theta(empty_graph(3)) == float("-inf")


class TestTrianglePartition:
    """Test the triangle-partition decision."""

    def test_ore_fast_path(self):
        """Test K₆ is decided by the Ore-degree rule and carries triangles."""
        decision = has_k_triangle_partition(complete_graph(6), 2)
        assert decision.verdict is Verdict.HAS_K_CYCLES
        assert decision.deciding_rule == "Ore"
        assert decision.witness is not None
        assert all(len(c) == 3 for c in decision.witness.cycles)
        assert decision.witness.size == 2

    def test_complete_graph_k3(self):
        """Test K₉ splits into three triangles."""
        assert has_k_triangle_partition(complete_graph(9), 3).verdict is Verdict.HAS_K_CYCLES

    def test_odd_exception(self, two_k3_join_k3bar):
        """Test 2K₃ ∨ K̄₃ is the minimum-degree no-instance."""
        decision = has_k_triangle_partition(two_k3_join_k3bar, 3)
        assert decision.verdict is Verdict.NO_K_CYCLES
        assert decision.deciding_rule == "C14"

    def test_cycle_has_no_triangles(self):
        """Test C₆ is decided through the complement coloring."""
        decision = has_k_triangle_partition(cycle_graph(6), 2)
        assert decision.verdict is Verdict.NO_K_CYCLES
        assert decision.deciding_rule == "equitable"

    def test_two_triangles(self):
        """Test 2K₃ is found through the complement coloring."""
        graph = disjoint_union(complete_graph(3), complete_graph(3))
        decision = has_k_triangle_partition(graph, 2)
        assert decision.verdict is Verdict.HAS_K_CYCLES
        assert decision.deciding_rule == "equitable"
        assert decision.witness is not None
        assert set(decision.witness.cycles) == {(0, 1, 2), (3, 4, 5)}

    def test_c9(self):
        """Test C₉ has no triangle at all."""
        assert has_k_triangle_partition(cycle_graph(9), 3).verdict is Verdict.NO_K_CYCLES

    def test_wrong_order(self):
        """Test the graph must have exactly 3k vertices."""
        with pytest.raises(InvalidParameterError, match="n = 3k"):
            has_k_triangle_partition(complete_graph(7), 2)

    def test_invalid_k(self):
        """Test k must be positive."""
        with pytest.raises(InvalidParameterError):
            has_k_triangle_partition(Graph(0), 0)

    def test_wheel_is_not_a_minimum_degree_yes(self, wheel6):
        """Test the six-vertex wheel has no triangle factor despite δ = 3 and α = 2."""
        decision = has_k_triangle_partition(wheel6, 2)
        assert decision.verdict is Verdict.NO_K_CYCLES
        assert decision.deciding_rule == "equitable"
        assert decision.witness is None

    def test_minimum_degree_rule_needs_k_at_least_3(self, wheel6):
        """Test the minimum-degree shortcut is not taken for k = 2."""
        decision = has_k_triangle_partition(wheel6, 2)
        assert all(not step.applied for step in decision.trail if step.rule == "C14")

    def test_independence_budget_falls_through(self, mocker, two_k3_join_k3bar):
        """Test an exhausted α search is recorded and the coloring still decides."""
        mocker.patch(
            "cyclepack.equitable.independence_number",
            side_effect=BudgetExceededError("independence_nodes", 1),
        )
        decision = has_k_triangle_partition(two_k3_join_k3bar, 3)
        assert decision.verdict is Verdict.NO_K_CYCLES
        assert decision.deciding_rule == "equitable"
        assert any("undetermined" in step.detail for step in decision.trail)
