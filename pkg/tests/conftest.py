"""Shared test fixtures for cyclepack tests."""

import io

import pytest
from hypothesis import strategies as st

from cyclepack.config import SearchBudgets
from cyclepack.families import (
    FamilyKind,
    FamilySpec,
    complete_graph,
    empty_graph,
    gk_graph,
    named_family,
    petersen_graph,
    wheel_graph,
    y1_graph,
    y2_graph,
)
from cyclepack.graph import Graph, disjoint_union, join

# =============================================================================
# Graph fixtures
# =============================================================================


def family_factory(kind: FamilyKind | str, **params: int) -> Graph:
    """
    Build a named family graph (non-fixture version for use in hypothesis tests).

    Args:
        kind: Family kind or its string value
        **params: Family parameters (n, k, r, t, s)

    Returns:
        The constructed Graph
    """
    return named_family(FamilySpec(FamilyKind(kind), **params))


@pytest.fixture
def family():
    """
    Get a family constructor.

    Usage:
        graph = family("Gk", k=3)

    Returns:
        Function that takes a family kind and parameters and returns a Graph
    """
    return family_factory


@pytest.fixture
def y1():
    """Y₁: K₈ with one edge subdivided twice (10 vertices)."""
    return y1_graph()


@pytest.fixture
def y2():
    """Y₂: K₁ joined to K_{4,4} with one vertex split into an edge."""
    return y2_graph()


@pytest.fixture
def gk3():
    """G_3 = K̄₄ ∨ (K̄₃ + K₃)."""
    return gk_graph(3)


@pytest.fixture
def hsharp3():
    """K̄₄ ∨ K₅, the k = 3 graph whose independence number is too large."""
    return join(empty_graph(4), complete_graph(5))


@pytest.fixture
def two_k3_join_k3bar():
    """2K₃ ∨ K̄₃, the odd-k exception on 3k vertices."""
    return join(disjoint_union(complete_graph(3), complete_graph(3)), empty_graph(3))


@pytest.fixture
def petersen():
    """The Petersen graph."""
    return petersen_graph()


@pytest.fixture
def wheel6():
    """Wheel on 6 vertices: hub 0 and rim 1..5."""
    return wheel_graph(6)


# =============================================================================
# Budget fixtures
# =============================================================================


@pytest.fixture
def budgets():
    """Default search budgets."""
    return SearchBudgets()


@pytest.fixture
def tight_budgets():
    """
    Get budgets with every node budget set to one.

    Any search that branches even once runs out immediately.
    """
    return SearchBudgets().override("1")



# =============================================================================
# Hypothesis strategies
# =============================================================================


@st.composite
def small_graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 7) -> Graph:
    """
    Draw a simple graph on a handful of vertices.

    Small enough that brute force over vertex subsets stays cheap.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen, strict=True) if keep])


# =============================================================================
# CLI fixtures
# =============================================================================


@pytest.fixture
def cli_io():
    """
    Get in-memory stdin/stdout for cyclepack.cli.run.

    Usage:
        stdin, stdout = cli_io("Bw\\n")
        code = run(["pack", "-k", "1"], stdin=stdin, stdout=stdout)

    Returns:
        Function that takes the stdin text and returns (stdin, stdout) streams
    """

    def _make(text: str = "") -> tuple[io.StringIO, io.StringIO]:
        return io.StringIO(text), io.StringIO()

    return _make
