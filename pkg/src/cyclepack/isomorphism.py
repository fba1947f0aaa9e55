"""Canonical labelling and isomorphism testing for small graphs.

The canonical form is the lexicographically largest relabelled adjacency
tuple over all discrete partitions reachable by equitable refinement and
individualization. Twin vertices in a cell are explored once.
"""

import logging

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import BudgetExceededError
from cyclepack.graph import Graph, iter_bits

logger = logging.getLogger(__name__)

CanonicalForm = tuple[int, tuple[int, ...]]


def _refine(graph: Graph, colors: list[int]) -> list[int]:
    """Refine an ordered partition until every cell is equitable."""
    adj = graph.adjacency
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(graph.n)
        ]
        ordered = sorted(set(signatures))
        index = {sig: i for i, sig in enumerate(ordered)}
        colors = [index[sig] for sig in signatures]
        if len(ordered) == cells:
            return colors
        cells = len(ordered)


class _CanonicalSearch:
    def __init__(self, graph: Graph, leaf_limit: int):
        self.graph = graph
        self.leaf_limit = leaf_limit
        self.leaves = 0
        self.best: tuple[int, ...] | None = None

    def run(self) -> tuple[int, ...]:
        degrees = sorted(set(self.graph.degrees))
        rank = {d: i for i, d in enumerate(degrees)}
        self._search([rank[d] for d in self.graph.degrees])
        assert self.best is not None
        return self.best

    def _leaf(self, colors: list[int]) -> None:
        self.leaves += 1
        if self.leaves > self.leaf_limit:
            raise BudgetExceededError("canonical_leaves", self.leaf_limit)
        relabelled = [0] * self.graph.n
        for v, a in enumerate(self.graph.adjacency):
            mask = 0
            for u in iter_bits(a):
                mask |= 1 << colors[u]
            relabelled[colors[v]] = mask
        key = tuple(relabelled)
        if self.best is None or key > self.best:
            self.best = key

    def _search(self, colors: list[int]) -> None:
        colors = _refine(self.graph, colors)
        n = self.graph.n
        if len(set(colors)) == n:
            self._leaf(colors)
            return

        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, size in sizes.items() if size > 1)
        adj = self.graph.adjacency

        explored: list[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            if any(adj[v] & ~(1 << w) == adj[w] & ~(1 << v) for w in explored):
                continue
            explored.append(v)
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            self._search(split)


def canonical_form(graph: Graph, budgets: SearchBudgets | None = None) -> CanonicalForm:
    """
    Canonical form of a graph, cached on the instance.

    Two graphs are isomorphic iff their canonical forms are equal.

    Args:
        graph: Graph to label (intended for n up to about 20)
        budgets: Search budgets; uses canonical_leaves

    Returns:
        (n, relabelled adjacency bitsets)

    Raises:
        BudgetExceededError: If the search tree has more leaves than allowed
    """
    cached = graph._canonical
    if cached is not None:
        return cached
    budgets = budgets or SearchBudgets()
    if graph.n == 0:
        form: CanonicalForm = (0, ())
    else:
        search = _CanonicalSearch(graph, budgets.canonical_leaves)
        form = (graph.n, search.run())
        logger.debug(f"canonical_form n={graph.n} leaves={search.leaves}")
    # Idempotent: concurrent writers store the same value.
    graph._canonical = form
    return form


def canonical_graph(graph: Graph, budgets: SearchBudgets | None = None) -> Graph:
    """The graph relabelled into canonical order."""
    _, adjacency = canonical_form(graph, budgets)
    return Graph.from_adjacency(adjacency)


def is_isomorphic(first: Graph, second: Graph, budgets: SearchBudgets | None = None) -> bool:
    """
    Test whether two graphs are isomorphic.

    Cheap invariants (order, size, degree sequence) are compared before any
    canonical labelling is computed.

    Example:
        >>> is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)))
        False
    """
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if sorted(first.degrees) != sorted(second.degrees):
        return False
    return canonical_form(first, budgets) == canonical_form(second, budgets)
