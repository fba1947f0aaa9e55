"""Timing bounds for the searches used inside verification sweeps.

Thresholds are generous: the exhaustive sweeps call these functions
thousands of times, so a regression here shows up as minutes there.
"""

import os
import time

import pytest

from cyclepack.decide import decide
from cyclepack.enumeration import enumerate_graphs
from cyclepack.families import complete_graph, petersen_graph, y1_graph
from cyclepack.independence import independence_number
from cyclepack.isomorphism import canonical_form
from cyclepack.oracle import oracle_max_packing
from cyclepack.packer import find_disjoint_cycles

pytestmark = pytest.mark.performance

SLACK = 3.0 if os.getenv("CI") else 1.5


def _elapsed(action) -> float:
    start = time.perf_counter()
    action()
    return time.perf_counter() - start


class TestPerformanceBenchmarks:
    """Single-graph operations stay well inside their budgets."""

    def test_packer_on_y1(self):
        """Packing Y1 for k = 3 (oracle fallback included) takes under a second."""
        assert _elapsed(lambda: find_disjoint_cycles(y1_graph(), 3)) < 1.0 * SLACK

    def test_oracle_on_complete_graph(self):
        """The exact oracle on K12 takes under two seconds."""
        assert _elapsed(lambda: oracle_max_packing(complete_graph(12))) < 2.0 * SLACK

    def test_decide_petersen(self):
        """Deciding two cycles in the Petersen graph takes under half a second."""
        assert _elapsed(lambda: decide(petersen_graph(), 2)) < 0.5 * SLACK

    def test_independence_number_k_25(self):
        """α of a 25-vertex complete graph is found without branching blow-up."""
        assert _elapsed(lambda: independence_number(complete_graph(25))) < 0.5 * SLACK

    def test_canonical_form_of_regular_graph(self):
        """Canonical labelling of the Petersen graph takes under a second."""
        assert _elapsed(lambda: canonical_form(petersen_graph())) < 1.0 * SLACK

    @pytest.mark.slow
    def test_enumerate_seven_vertices(self):
        """All 1044 classes on seven vertices are enumerated within a minute."""
        count = 0

        def run():
            nonlocal count
            count = sum(1 for _ in enumerate_graphs(7))

        assert _elapsed(run) < 60.0 * SLACK
        assert count == 1044
