"""Unit tests for the constructive packer."""

import pytest

from cyclepack.exceptions import InvalidPackingError, InvalidParameterError
from cyclepack.families import complete_graph, wheel_graph
from cyclepack.graph import Graph
from cyclepack.hypotheses import check_hypotheses
from cyclepack.models import (
    CandidateCounterexample,
    CyclePacking,
    ExceptionalGraph,
    ExceptionKind,
    HypothesisViolation,
    IndependentSetCertificate,
    Packing,
    ResultKind,
)
from cyclepack.packer import (
    attachment_cycle_bound,
    find_disjoint_cycles,
    improve_step,
    optimality_key,
    validate_result,
)


class TestOptimalityKey:
    """Test optimality keys of concrete packings."""

    def test_four_cycle_in_k6(self):
        """Test a 4-cycle in K₆ leaves an edge in R."""
        graph = complete_graph(6)
        key = optimality_key(graph, CyclePacking.from_cycles(graph, [(0, 1, 2, 3)]))
        assert key.as_tuple() == (1, 4, 2, 1)
        assert key.o3_exact

    def test_two_triangles_in_k6(self):
        """Test two triangles cover K₆."""
        graph = complete_graph(6)
        key = optimality_key(graph, CyclePacking.from_cycles(graph, [(0, 1, 2), (3, 4, 5)]))
        assert key.as_tuple() == (2, 6, 0, 0)


class TestAttachmentBound:
    """Test the attachment bound on shorter replacement cycles."""

    def test_hub_gives_triangle(self):
        """Test a hub over the rim closes a triangle."""
        graph = wheel_graph(7)
        assert attachment_cycle_bound(graph, (1, 2, 3, 4, 5, 6), 1 << 0) == 3

    def test_two_far_attachments(self):
        """Test the shorter arc between attachments is used."""
        graph = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 3)])
        assert attachment_cycle_bound(graph, (0, 1, 2, 3, 4, 5), 1 << 6) == 5

    def test_single_attachment(self):
        """Test one neighbour on the cycle gives no bound."""
        graph = Graph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
        assert attachment_cycle_bound(graph, (0, 1, 2), 1 << 3) is None


class TestImproveStep:
    """Test single improvement steps."""

    def test_adds_cycle_from_remainder(self):
        """Test an empty packing gains the least shortest cycle."""
        graph = complete_graph(6)
        improved = improve_step(graph, CyclePacking.empty(graph))
        assert improved is not None
        assert improved.cycles == ((0, 1, 2),)

    def test_shortens_cycle(self):
        """Test a 4-cycle in K₆ is replaced by a triangle."""
        graph = complete_graph(6)
        improved = improve_step(graph, CyclePacking.from_cycles(graph, [(0, 1, 2, 3)]))
        assert improved is not None
        assert improved.cycles == ((0, 1, 2),)

    def test_exchange_gains_a_cycle(self):
        """Test one triangle is traded for two through the remainder."""
        graph = Graph(
            7, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (3, 4), (1, 5), (1, 6), (5, 6)]
        )
        improved = improve_step(graph, CyclePacking.from_cycles(graph, [(0, 1, 2)]))
        assert improved is not None
        assert improved.size == 2
        assert set(improved.cycles) == {(0, 3, 4), (1, 5, 6)}

    def test_local_optimum(self):
        """Test two triangles in K₆ cannot be improved."""
        graph = complete_graph(6)
        packing = CyclePacking.from_cycles(graph, [(0, 1, 2), (3, 4, 5)])
        assert improve_step(graph, packing) is None

    def test_rejects_invalid_packing(self):
        """Test the input packing is validated."""
        with pytest.raises(InvalidPackingError):
            improve_step(complete_graph(4), CyclePacking(((0, 1, 2),), frozenset()))


class TestFindDisjointCycles:
    """Test every result variant of the packer."""

    def test_packing_in_k10(self):
        """Test K₁₀ yields three disjoint cycles."""
        graph = complete_graph(10)
        result = find_disjoint_cycles(graph, 3)
        assert isinstance(result, Packing)
        assert result.packing.size == 3
        assert validate_result(graph, 3, result)
        assert result.diagnostics.key is not None
        assert result.diagnostics.key.o1 == 3

    def test_y1_is_exceptional(self, y1):
        """Test Y₁ is reported as exceptional for k = 3."""
        assert find_disjoint_cycles(y1, 3) == ExceptionalGraph(ExceptionKind.Y1)

    def test_gk_violates_h2(self, gk3):
        """Test G₃ is reported as violating (H2)."""
        result = find_disjoint_cycles(gk3, 3)
        assert isinstance(result, HypothesisViolation)
        assert result.violated == ("h2",)
        assert validate_result(gk3, 3, result)

    def test_hsharp_certificate(self, hsharp3):
        """Test K̄₄ ∨ K₅ yields the independent set certificate."""
        result = find_disjoint_cycles(hsharp3, 3)
        assert result == IndependentSetCertificate(frozenset({0, 1, 2, 3}))
        assert validate_result(hsharp3, 3, result)

    def test_wheel(self, wheel6):
        """Test W₆ is the k = 2 exception."""
        result = find_disjoint_cycles(wheel6, 2)
        assert result == ExceptionalGraph(ExceptionKind.WHEEL)
        assert validate_result(wheel6, 2, result)

    def test_two_kk_join(self, two_k3_join_k3bar):
        """Test 2K₃ ∨ K̄₃ is the odd-k exception."""
        assert find_disjoint_cycles(two_k3_join_k3bar, 3) == ExceptionalGraph(
            ExceptionKind.TWO_KK_JOIN_KKBAR
        )

    def test_k_zero(self):
        """Test k = 0 returns the empty packing."""
        result = find_disjoint_cycles(complete_graph(3), 0)
        assert isinstance(result, Packing)
        assert result.packing.size == 0

    def test_too_few_vertices(self):
        """Test n < 3k is a hypothesis violation."""
        result = find_disjoint_cycles(complete_graph(5), 2)
        assert isinstance(result, HypothesisViolation)
        assert result.violated == ("n<3k", "h1", "k<3")

    def test_negative_k(self):
        """Test negative k is rejected."""
        with pytest.raises(InvalidParameterError):
            find_disjoint_cycles(complete_graph(3), -1)

    def test_empty_graph(self):
        """Test the graph without vertices is rejected."""
        with pytest.raises(InvalidParameterError):
            find_disjoint_cycles(Graph(0), 1)

    def test_kind(self):
        """Test the result kind is exposed."""
        assert find_disjoint_cycles(complete_graph(10), 3).kind is ResultKind.PACKING


class TestValidateResult:
    """Test independent re-checking of results."""

    def test_not_independent(self):
        """Test an adjacent pair is no certificate."""
        certificate = IndependentSetCertificate(frozenset({0, 1}))
        result = validate_result(complete_graph(10), 3, certificate)
        assert not result
        assert result.reason == "not-independent"

    def test_too_small(self, hsharp3):
        """Test a certificate below n − 2k + 1 is rejected."""
        result = validate_result(hsharp3, 3, IndependentSetCertificate(frozenset({0, 1})))
        assert result.reason == "too-small"

    def test_wrong_count(self):
        """Test a packing of the wrong size is rejected."""
        graph = complete_graph(6)
        packing = Packing(CyclePacking.from_cycles(graph, [(0, 1, 2)]))
        assert validate_result(graph, 2, packing).reason == "wrong-count"

    def test_false_exception(self):
        """Test a non-exceptional graph cannot claim an exception."""
        result = validate_result(complete_graph(10), 3, ExceptionalGraph(ExceptionKind.Y1))
        assert result.reason == "not-exceptional"

    def test_violation_that_holds(self, y1):
        """Test a claimed violation of a hypothesis that holds is rejected."""
        report = check_hypotheses(y1, 3)
        assert validate_result(y1, 3, HypothesisViolation(report, ("h2",))).reason == "h2-holds"

    def test_report_for_other_graph(self, y1):
        """Test a report computed for another pair is rejected."""
        report = check_hypotheses(complete_graph(5), 2)
        result = validate_result(y1, 3, HypothesisViolation(report, ("n<3k",)))
        assert result.reason == "report-mismatch"

    def test_candidate(self):
        """Test a stalled packing is accepted as a candidate only below k."""
        graph = complete_graph(6)
        packing = CyclePacking.from_cycles(graph, [(0, 1, 2)])
        assert validate_result(graph, 2, CandidateCounterexample(packing)).reason == "candidate"
        assert validate_result(graph, 1, CandidateCounterexample(packing)).reason == "not-stalled"
