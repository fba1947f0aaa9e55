"""Hypothesis evaluation and recognition of the exceptional graphs."""

import logging
from functools import lru_cache

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.families import complete_graph, empty_graph, y1_graph, y2_graph
from cyclepack.graph import Graph, degree_stats, disjoint_union, iter_bits, join
from cyclepack.independence import IndependenceResult, independence_number
from cyclepack.isomorphism import is_isomorphic
from cyclepack.models import ExceptionKind, HypothesisReport

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1)
def _y1_template() -> Graph:
    return y1_graph()


@lru_cache(maxsize=1)
def _y2_template() -> Graph:
    return y2_graph()


@lru_cache(maxsize=16)
def _two_kk_join_kk_bar(k: int) -> Graph:
    return join(disjoint_union(complete_graph(k), complete_graph(k)), empty_graph(k))


def find_wheel_hub(graph: Graph) -> int | None:
    """
    Hub of a wheel, if the graph is one.

    A wheel is a vertex adjacent to every other vertex whose removal leaves a
    single cycle. Returns the smallest qualifying hub.
    """
    n = graph.n
    if n < 4 or graph.edge_count != 2 * (n - 1):
        return None
    full = graph.full_mask
    for hub in range(n):
        if graph.degrees[hub] != n - 1:
            continue
        rim = full & ~(1 << hub)
        if any((graph.adjacency[v] & rim).bit_count() != 2 for v in iter_bits(rim)):
            continue
        # 2-regular on n-1 vertices: a single cycle iff connected
        start = (rim & -rim).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= graph.adjacency[v] & rim
            frontier = nxt & ~seen
            seen |= frontier
        if seen == rim:
            return hub
    return None


def is_wheel(graph: Graph) -> bool:
    """True iff the graph is a wheel."""
    return find_wheel_hub(graph) is not None


def is_exceptional(
    graph: Graph, k: int, budgets: SearchBudgets | None = None
) -> ExceptionKind | None:
    """
    Recognise the graphs that meet the degree hypotheses without k disjoint cycles.

    Args:
        graph: Input graph
        k: Requested number of cycles
        budgets: Budgets for the canonical-form searches

    Returns:
        Y1/Y2 only when k = 3 and n = 10; Wheel only when k = 2;
        TwoKkJoinKkBar only when k is odd and n = 3k; otherwise None

    Example:
        >>> is_exceptional(y2_graph(), 3)
        <ExceptionKind.Y2: 'Y2'>
    """
    if k == 3 and graph.n == 10:
        if is_isomorphic(graph, _y1_template(), budgets):
            return ExceptionKind.Y1
        if is_isomorphic(graph, _y2_template(), budgets):
            return ExceptionKind.Y2
    if k == 2 and is_wheel(graph):
        return ExceptionKind.WHEEL
    if k % 2 == 1 and graph.n == 3 * k and is_isomorphic(graph, _two_kk_join_kk_bar(k), budgets):
        return ExceptionKind.TWO_KK_JOIN_KKBAR
    return None


def structural_independent_set(graph: Graph, k: int) -> frozenset[int] | None:
    """
    Polynomial (H3) test for graphs with δ ≥ 2k − 1.

    Under that degree bound no independent set is larger than n − 2k + 1, and
    one of exactly that size exists iff some vertex v of degree 2k − 1 has
    V ∖ N(v) independent (G then contains K_{2k−1, n−2k+1}).

    Returns:
        Such an independent set, or None when α(G) ≤ n − 2k

    Raises:
        InvalidParameterError: If δ(G) < 2k − 1
    """
    if graph.n == 0 or min(graph.degrees) < 2 * k - 1:
        raise InvalidParameterError(f"structural test needs delta >= {2 * k - 1}")
    full = graph.full_mask
    for v in range(graph.n):
        if graph.degrees[v] != 2 * k - 1:
            continue
        outside = full & ~graph.adjacency[v]
        if all(not graph.adjacency[u] & outside for u in iter_bits(outside)):
            return frozenset(iter_bits(outside))
    return None


def alpha_exceeds(
    graph: Graph, threshold: int, budgets: SearchBudgets | None = None
) -> IndependenceResult:
    """
    Answer "is α(G) > threshold?" with the cheapest available search.

    Raises:
        BudgetExceededError: If the search runs out of budget undecided
    """
    return independence_number(graph, threshold=max(threshold, -1), budgets=budgets)


def check_hypotheses(
    graph: Graph, k: int, budgets: SearchBudgets | None = None
) -> HypothesisReport:
    """
    Evaluate (H1)-(H4) and the companion degree conditions for (G, k).

    Args:
        graph: Input graph with at least one vertex
        k: Requested number of disjoint cycles
        budgets: Search budgets for the α search and isomorphism tests

    Returns:
        HypothesisReport; alpha and h3 are marked undetermined if the α search
        runs out of budget

    Raises:
        InvalidParameterError: If k < 1 or the graph is empty

    Example:
        >>> check_hypotheses(y1_graph(), 3).h2
        True
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    stats = degree_stats(graph)
    n = graph.n
    threshold = n - 2 * k

    alpha: int | None
    alpha_exact = False
    witness: frozenset[int] | None = None
    h3: bool | None
    if stats.delta >= 2 * k - 1:
        witness = structural_independent_set(graph, k)
        if witness is not None:
            alpha, alpha_exact, h3 = len(witness), True, False
        else:
            alpha, h3 = None, True
    else:
        try:
            result = alpha_exceeds(graph, threshold, budgets)
            alpha, alpha_exact, witness = result.size, result.exact, result.witness
            h3 = not result.exceeds(threshold)
        except BudgetExceededError as e:
            partial = e.partial
            logger.warning(f"alpha search undecided for n={n}, k={k}: {e}")
            alpha = partial.size if partial is not None else None
            witness = partial.witness if partial is not None else None
            h3 = False if alpha is not None and alpha > threshold else None

    exception = is_exceptional(graph, k, budgets)
    h4 = exception not in (ExceptionKind.WHEEL, ExceptionKind.TWO_KK_JOIN_KKBAR)

    report = HypothesisReport(
        n=n,
        k=k,
        delta=stats.delta,
        sigma2=stats.sigma2,
        alpha=alpha,
        alpha_exact=alpha_exact,
        alpha_witness=witness,
        h1=n >= 3 * k + 1,
        h2=stats.sigma2 >= 4 * k - 3,
        h3=h3,
        e2=stats.sigma2 >= 4 * k - 1,
        ch_i=n >= 3 * k,
        ch_ii=stats.delta >= 2 * k,
        dirac_ii=stats.delta >= 2 * k - 1,
        h4=h4,
    )
    logger.debug(f"check_hypotheses {report.summary()}")
    return report
