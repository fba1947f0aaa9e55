"""Exact independence number by branch and bound on bitsets."""

import logging
from dataclasses import dataclass

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.graph import Graph, iter_bits, lowest_bit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceResult:
    """
    Outcome of an independence-number search.

    Attributes:
        size: Size of the witness set
        witness: An independent set of that size
        exact: True if size is α(G); False if the search stopped early at a threshold
    """

    size: int
    witness: frozenset[int]
    exact: bool

    def exceeds(self, threshold: int) -> bool:
        """True iff the witness proves α > threshold."""
        return self.size > threshold


def clique_cover_bound(graph: Graph, mask: int) -> int:
    """Number of cliques in a greedy clique cover of G[mask]; an upper bound on α(G[mask])."""
    adj = graph.adjacency
    remaining = mask
    count = 0
    while remaining:
        v = lowest_bit(remaining)
        clique = 1 << v
        candidates = adj[v] & remaining
        while candidates:
            u = lowest_bit(candidates)
            clique |= 1 << u
            candidates &= adj[u]
        remaining &= ~clique
        count += 1
    return count


class _MaxIndependentSetSearch:
    """Branch on a maximum-degree vertex; bound with a greedy clique cover."""

    def __init__(self, graph: Graph, threshold: int | None, node_limit: int):
        self.graph = graph
        self.threshold = threshold
        self.node_limit = node_limit
        self.nodes = 0
        self.best = 0
        self.best_size = 0
        self.stopped = False

    def run(self) -> IndependenceResult:
        self._search(self.graph.full_mask, 0, 0)
        witness = frozenset(iter_bits(self.best))
        return IndependenceResult(size=self.best_size, witness=witness, exact=not self.stopped)

    def _record(self, chosen: int, size: int) -> None:
        if size > self.best_size:
            self.best, self.best_size = chosen, size
            if self.threshold is not None and size > self.threshold:
                self.stopped = True

    def _search(self, candidates: int, chosen: int, size: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            partial = IndependenceResult(self.best_size, frozenset(iter_bits(self.best)), False)
            raise BudgetExceededError("independence_nodes", self.node_limit, partial)

        adj = self.graph.adjacency
        # Vertices of degree 0 or 1 in the candidate set belong to some maximum set.
        changed = True
        while changed and candidates:
            changed = False
            for v in iter_bits(candidates):
                if not candidates >> v & 1:
                    continue
                local = adj[v] & candidates
                if local.bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    candidates &= ~(local | (1 << v))
                    changed = True

        if not candidates:
            self._record(chosen, size)
            return
        self._record(chosen, size)
        if self.stopped:
            return
        if size + clique_cover_bound(self.graph, candidates) <= self.best_size:
            return

        pivot = max(iter_bits(candidates), key=lambda v: ((adj[v] & candidates).bit_count(), -v))
        self._search(candidates & ~adj[pivot] & ~(1 << pivot), chosen | (1 << pivot), size + 1)
        if self.stopped:
            return
        self._search(candidates & ~(1 << pivot), chosen, size)


def independence_number(
    graph: Graph,
    threshold: int | None = None,
    budgets: SearchBudgets | None = None,
) -> IndependenceResult:
    """
    Compute α(G) with a maximum independent set.

    Args:
        graph: Input graph (exact search is intended for n up to about 40)
        threshold: If given, stop as soon as a set of size threshold + 1 is found
        budgets: Search budgets; uses independence_nodes

    Returns:
        IndependenceResult; exact is False only when the threshold stopped the search

    Raises:
        BudgetExceededError: If the node budget runs out; ``partial`` holds the
            best set found so far (a lower bound)

    Example:
        >>> independence_number(complete_bipartite(3, 3)).size
        3
    """
    budgets = budgets or SearchBudgets()
    if threshold is not None and threshold < -1:
        raise InvalidParameterError(f"threshold must be >= -1, got {threshold}")
    if graph.n == 0:
        return IndependenceResult(size=0, witness=frozenset(), exact=True)
    search = _MaxIndependentSetSearch(graph, threshold, budgets.independence_nodes)
    result = search.run()
    logger.debug(
        f"independence_number n={graph.n} size={result.size} exact={result.exact} "
        f"nodes={search.nodes}"
    )
    return result
