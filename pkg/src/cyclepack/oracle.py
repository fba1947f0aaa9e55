"""Exact maximum disjoint-cycle packing by memoised branch and bound.

The search branches on the lowest vertex v left in the 2-core: either v lies
on a chordless cycle of the packing (tried shortest first) or v is unused.
Restricting to chordless cycles loses nothing, since shortcutting a cycle
along a chord only frees vertices.
"""

import logging
from dataclasses import dataclass

from cyclepack.config import SearchBudgets
from cyclepack.cycles import Cycle, canonical_cycle, chordless_cycles_through, two_core
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.graph import Graph, Multigraph, iter_bits, lowest_bit, mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    """
    Exact packing number with a witness.

    Attributes:
        count: Number of disjoint cycles in the witness
        cycles: The witness cycles
        complete: True if count is the maximum; False if the search stopped
            early because stop_at cycles were found
    """

    count: int
    cycles: tuple[Cycle, ...]
    complete: bool

    def at_least(self, k: int) -> bool:
        """True iff the graph has k disjoint cycles."""
        return self.count >= k


def greedy_independent_set_size(graph: Graph, mask: int) -> int:
    """Size of the independent set picked greedily by minimum degree inside G[mask]."""
    adj = graph.adjacency
    size = 0
    while mask:
        v = min(iter_bits(mask), key=lambda u: ((adj[u] & mask).bit_count(), u))
        mask &= ~(adj[v] | (1 << v))
        size += 1
    return size


class _PackingSearch:
    """Memoised search for a largest set of disjoint cycles inside a vertex bitset."""

    def __init__(self, graph: Graph, node_limit: int, budget_name: str = "oracle_nodes"):
        self.graph = graph
        self.node_limit = node_limit
        self.budget_name = budget_name
        self.nodes = 0
        # mask -> (best packing found, limit it was searched with)
        self.memo: dict[int, tuple[tuple[Cycle, ...], int]] = {}

    def core(self, mask: int) -> int:
        return two_core(self.graph, mask)

    def bound(self, mask: int) -> int:
        size = mask.bit_count()
        return min(size // 3, (size - greedy_independent_set_size(self.graph, mask)) // 2)

    def cycles_through(self, mask: int, v: int) -> list[Cycle]:
        return chordless_cycles_through(self.graph, mask, v)

    def solve(self, mask: int, limit: int) -> tuple[Cycle, ...]:
        """
        Largest packing inside mask, truncated at limit cycles.

        The result has min(maximum, limit) cycles.
        """
        mask = self.core(mask)
        if not mask or limit <= 0:
            return ()
        cached = self.memo.get(mask)
        if cached is not None:
            packing, searched_limit = cached
            if len(packing) < searched_limit or limit <= searched_limit:
                return packing[:limit]

        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceededError(self.budget_name, self.node_limit)

        target = min(limit, self.bound(mask))
        best: tuple[Cycle, ...] = ()
        if target > 0:
            v = lowest_bit(mask)
            for cycle in self.cycles_through(mask, v):
                if len(best) >= target:
                    break
                rest = self.solve(mask & ~mask_of(cycle), target - 1)
                if len(rest) + 1 > len(best):
                    best = (cycle,) + rest
            if len(best) < target:
                rest = self.solve(mask & ~(1 << v), target)
                if len(rest) > len(best):
                    best = rest

        self.memo[mask] = (best, limit)
        return best


def max_packing_within(
    graph: Graph, mask: int, limit: int, node_limit: int, budget_name: str = "oracle_nodes"
) -> tuple[Cycle, ...]:
    """
    Up to ``limit`` disjoint cycles inside G[mask].

    Returns:
        A packing of min(maximum, limit) cycles

    Raises:
        BudgetExceededError: If node_limit search nodes are used up
    """
    return _PackingSearch(graph, node_limit, budget_name).solve(mask, limit)


def oracle_max_packing(
    graph: Graph,
    stop_at: int | None = None,
    budgets: SearchBudgets | None = None,
) -> OracleResult:
    """
    Exact maximum number of vertex-disjoint cycles.

    Args:
        graph: Input graph (exact search is intended for n up to about 16)
        stop_at: Return as soon as this many disjoint cycles are found
        budgets: Search budgets; uses oracle_nodes

    Returns:
        OracleResult with a valid witness packing

    Raises:
        BudgetExceededError: If the node budget runs out; never a wrong answer

    Example:
        >>> oracle_max_packing(complete_graph(6)).count
        2
    """
    budgets = budgets or SearchBudgets()
    if stop_at is not None and stop_at < 0:
        raise InvalidParameterError(f"stop_at must be non-negative, got {stop_at}")
    ceiling = graph.n // 3
    limit = ceiling if stop_at is None else min(stop_at, ceiling)
    search = _PackingSearch(graph, budgets.oracle_nodes)
    cycles = search.solve(graph.full_mask, limit)
    complete = len(cycles) < limit or limit == ceiling
    logger.debug(
        f"oracle_max_packing n={graph.n} count={len(cycles)} complete={complete} "
        f"nodes={search.nodes}"
    )
    return OracleResult(count=len(cycles), cycles=cycles, complete=complete)


class _MultigraphPackingSearch(_PackingSearch):
    """Packing search where loops and parallel pairs are cycles too."""

    def __init__(self, graph: Graph, looped: int, node_limit: int):
        super().__init__(graph, node_limit)
        self.looped = looped
        self.doubled_with = [0] * graph.n

    def add_double(self, u: int, v: int) -> None:
        self.doubled_with[u] |= 1 << v
        self.doubled_with[v] |= 1 << u

    def core(self, mask: int) -> int:
        adj = self.graph.adjacency
        changed = True
        while changed:
            changed = False
            for v in iter_bits(mask & ~self.looped):
                neighbours = adj[v] & mask
                degree = neighbours.bit_count() + (self.doubled_with[v] & mask).bit_count()
                if degree <= 1:
                    mask &= ~(1 << v)
                    changed = True
        return mask

    def bound(self, mask: int) -> int:
        looped = (mask & self.looped).bit_count()
        return looped + (mask & ~self.looped).bit_count() // 2

    def cycles_through(self, mask: int, v: int) -> list[Cycle]:
        if self.looped >> v & 1:
            return [(v,)]
        pairs: list[Cycle] = [(v, u) for u in iter_bits(self.doubled_with[v] & mask)]
        return pairs + chordless_cycles_through(self.graph, mask, v)


def oracle_max_packing_multigraph(
    multigraph: Multigraph, budgets: SearchBudgets | None = None
) -> OracleResult:
    """
    Exact maximum number of disjoint cycles in a small multigraph.

    A loop is a cycle on one vertex and a pair of parallel edges is a cycle
    on two vertices. Witness cycles use the multigraph's vertex labels.
    """
    budgets = budgets or SearchBudgets()
    labels = sorted(multigraph.vertices)
    index = {v: i for i, v in enumerate(labels)}
    simple = Graph(len(labels), ((index[u], index[v]) for u, v in multigraph.edges))
    looped = mask_of(index[v] for v in multigraph.loops)
    search = _MultigraphPackingSearch(simple, looped, budgets.oracle_nodes)
    for (u, v), multiplicity in multigraph.edges.items():
        if multiplicity >= 2:
            search.add_double(index[u], index[v])
    cycles = search.solve(simple.full_mask, len(labels))
    witness = tuple(
        canonical_cycle([labels[i] for i in c]) if len(c) > 2 else tuple(labels[i] for i in c)
        for c in cycles
    )
    return OracleResult(count=len(witness), cycles=witness, complete=True)
