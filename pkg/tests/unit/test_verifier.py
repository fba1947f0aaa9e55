"""Unit tests for theorem verification."""

import pytest

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.families import complete_bipartite, complete_graph, cycle_graph
from cyclepack.graph import disjoint_union
from cyclepack.verifier import (
    GraphRecord,
    Outcome,
    TheoremCheck,
    TheoremId,
    VerificationMode,
    VerificationReport,
    triangle_factor,
    verify,
)


class TestTheoremId:
    """Test theorem name parsing."""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("T1", TheoremId.T1),
            ("t9", TheoremId.T9),
            (" l16 ", TheoremId.L16),
            ("h3-necessity", TheoremId.H3_NECESSITY),
        ],
    )
    def test_parse(self, text, expected):
        """Test names are matched case-insensitively."""
        assert TheoremId.parse(text) is expected

    def test_unknown(self):
        """Test unknown names list the valid ones."""
        with pytest.raises(InvalidParameterError, match="expected one of T1"):
            TheoremId.parse("T3")


class TestTheoremCheck:
    """Test TheoremCheck validation."""

    @pytest.mark.parametrize(
        "theorem, k",
        [(TheoremId.T1, 0), (TheoremId.L16, 3), (TheoremId.T9, 2), (TheoremId.T2, 1)],
    )
    def test_invalid_combinations(self, theorem, k):
        """Test parameters outside a statement's scope are rejected."""
        with pytest.raises(InvalidParameterError):
            TheoremCheck(theorem, k)


class TestEvaluate:
    """Test per-graph outcomes."""

    def test_t1_pass(self):
        """Test K₆ meets δ ≥ 4 and packs two cycles."""
        record = TheoremCheck(TheoremId.T1, 2).evaluate(complete_graph(6))
        assert record.outcome is Outcome.PASS
        assert record.reason == "2 disjoint cycles found"
        assert record.graph6 == "E~~w"

    def test_t1_vacuous(self):
        """Test C₆ does not meet the degree hypothesis."""
        record = TheoremCheck(TheoremId.T1, 2).evaluate(cycle_graph(6))
        assert record.outcome is Outcome.VACUOUS
        assert record.reason == "δ=2 < 4"

    def test_t4_pass(self):
        """Test K₇ meets σ₂ ≥ 7."""
        record = TheoremCheck(TheoremId.T4, 2).evaluate(complete_graph(7))
        assert record.outcome is Outcome.PASS

    def test_t2(self, wheel6, two_k3_join_k3bar, hsharp3):
        """Test the minimum-degree statement and its exceptions."""
        assert TheoremCheck(TheoremId.T2, 2).evaluate(wheel6).outcome is Outcome.EXCEPTIONAL
        record = TheoremCheck(TheoremId.T2, 3).evaluate(two_k3_join_k3bar)
        assert record.outcome is Outcome.EXCEPTIONAL
        assert TheoremCheck(TheoremId.T2, 3).evaluate(hsharp3).outcome is Outcome.PASS

    def test_l16(self):
        """Test the k = 2 classification agrees with the oracle."""
        check = TheoremCheck(TheoremId.L16, 2)
        record = check.evaluate(disjoint_union(complete_graph(5), complete_graph(2)))
        assert record.outcome is Outcome.PASS
        assert record.reason.startswith("K5 (a)")
        assert check.evaluate(complete_graph(6)).outcome is Outcome.PASS

    def test_c14(self, two_k3_join_k3bar):
        """Test triangle partitions against exhaustive search."""
        assert TheoremCheck(TheoremId.C14, 2).evaluate(complete_graph(6)).outcome is Outcome.PASS
        assert TheoremCheck(TheoremId.C14, 2).evaluate(cycle_graph(6)).outcome is Outcome.PASS
        record = TheoremCheck(TheoremId.C14, 3).evaluate(two_k3_join_k3bar)
        assert record.outcome is Outcome.EXCEPTIONAL

    def test_h3_necessity(self):
        """Test graphs with k disjoint cycles have small α."""
        check = TheoremCheck(TheoremId.H3_NECESSITY, 2)
        assert check.evaluate(complete_graph(6)).outcome is Outcome.PASS
        assert check.evaluate(complete_bipartite(3, 3)).outcome is Outcome.VACUOUS

    def test_budget_exhaustion_is_skipped(self, mocker):
        """Test a search that runs out of budget is skipped, never passed."""
        mocker.patch(
            "cyclepack.verifier.find_disjoint_cycles",
            side_effect=BudgetExceededError("oracle_nodes", 1),
        )
        record = TheoremCheck(TheoremId.T1, 2).evaluate(complete_graph(6))
        assert record.outcome is Outcome.SKIPPED
        assert "oracle_nodes" in record.reason

    def test_oracle_limit_is_skipped(self, y1):
        """Test a no-instance too large for the oracle is skipped."""
        record = TheoremCheck(TheoremId.T9, 3).evaluate(y1, SearchBudgets(oracle_max_vertices=5))
        assert record.outcome is Outcome.SKIPPED


class TestTriangleFactor:
    """Test exhaustive triangle-factor search."""

    def test_two_triangles(self):
        """Test 2K₃ splits into its two triangles."""
        graph = disjoint_union(complete_graph(3), complete_graph(3))
        assert triangle_factor(graph) == [(0, 1, 2), (3, 4, 5)]

    def test_no_factor(self):
        """Test C₆ has no triangles."""
        assert triangle_factor(cycle_graph(6)) is None

    def test_order_not_divisible(self):
        """Test n not divisible by three has no factor."""
        assert triangle_factor(complete_graph(4)) is None


class TestVerify:
    """Test stream verification and report merging."""

    def test_t9_sharpness_stream(self, y1, y2, gk3):
        """Test Y₁ and Y₂ are exceptional and G₃ is outside the hypotheses."""
        report = verify([y1, y2, gk3], TheoremCheck(TheoremId.T9, 3))
        assert report.total == 3
        assert report.count(Outcome.EXCEPTIONAL) == 2
        assert report.count(Outcome.VACUOUS) == 1
        assert any(r.reason == "σ₂=8 < 9" for r in report.records)
        assert report.passed

    def test_passes_are_counted_not_kept(self):
        """Test PASS records only contribute to the counts."""
        report = verify([complete_graph(6), complete_graph(7)], TheoremCheck(TheoremId.T1, 2))
        assert report.count(Outcome.PASS) == 2
        assert report.records == ()

    def test_exhaustive_drops_seed(self):
        """Test exhaustive reports carry no seed."""
        report = verify([], TheoremCheck(TheoremId.T1, 2), seed=5)
        assert report.seed is None
        assert report.total == 0

    def test_sampled_keeps_seed(self):
        """Test sampled reports embed their seed."""
        report = verify([], TheoremCheck(TheoremId.T1, 2), mode=VerificationMode.SAMPLED, seed=5)
        assert report.seed == 5

    def test_invalid_workers(self):
        """Test workers must be positive."""
        with pytest.raises(InvalidParameterError):
            verify([], TheoremCheck(TheoremId.T1, 2), workers=0)

    def test_merge_is_commutative(self):
        """Test merging in either order gives the same report."""
        base = VerificationReport(TheoremId.T1, 2, VerificationMode.EXHAUSTIVE)
        first = base.extend(
            [GraphRecord("Bw", Outcome.VACUOUS, "x"), GraphRecord("A_", Outcome.PASS, "")]
        )
        second = base.extend([GraphRecord("A?", Outcome.SKIPPED, "y")])
        assert first.merge(second) == second.merge(first)
        assert first.merge(second).total == 3

    def test_merge_mismatch(self):
        """Test reports of different checks cannot be merged."""
        first = VerificationReport(TheoremId.T1, 2, VerificationMode.EXHAUSTIVE)
        second = VerificationReport(TheoremId.T1, 3, VerificationMode.EXHAUSTIVE)
        with pytest.raises(InvalidParameterError, match="different checks"):
            first.merge(second)
