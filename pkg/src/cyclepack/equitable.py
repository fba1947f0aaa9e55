"""Equitable colorings and the triangle-partition bridge.

A graph on 3k vertices splits into k disjoint triangles iff its complement
has an equitable k-coloring: each color class of the complement is an
independent set of size 3 there, hence a triangle in the graph.
"""

import logging
from dataclasses import dataclass

import networkx as nx

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import (
    BudgetExceededError,
    EquitableColoringUndetermined,
    InvalidParameterError,
)
from cyclepack.graph import Graph, complement, degree_stats, iter_bits
from cyclepack.hypotheses import is_exceptional
from cyclepack.independence import independence_number
from cyclepack.models import CyclePacking, Decision, ExceptionKind, RuleApplication, Verdict

logger = logging.getLogger(__name__)

EXACT_SEARCH_MAX_VERTICES = 15


@dataclass(frozen=True)
class EquitableColoring:
    """
    Proper coloring whose class sizes differ by at most one.

    Attributes:
        classes: Color classes (some may be empty when r > n)
        r: Number of classes
    """

    classes: tuple[frozenset[int], ...]
    r: int

    def __post_init__(self) -> None:
        if len(self.classes) != self.r:
            raise InvalidParameterError(f"expected {self.r} classes, got {len(self.classes)}")

    @property
    def sizes(self) -> list[int]:
        """Class sizes in class order."""
        return [len(c) for c in self.classes]

    def is_valid(self, graph: Graph) -> bool:
        """Classes partition V, each class is independent, sizes differ by at most one."""
        seen: set[int] = set()
        for cls in self.classes:
            if seen & cls:
                return False
            seen |= cls
            if not graph.is_independent(cls):
                return False
        if seen != set(range(graph.n)):
            return False
        sizes = self.sizes
        return max(sizes) - min(sizes) <= 1


def theta(graph: Graph) -> float:
    """
    Maximum Ore-degree: the largest d(x) + d(y) over edges xy.

    Returns NEG_INFINITY for edgeless graphs. For graphs with at least one
    edge and one non-edge, theta(complement(G)) = 2n − σ₂(G) − 2.
    """
    return degree_stats(graph).theta


def _from_assignment(assignment: list[int], r: int) -> EquitableColoring:
    classes: list[set[int]] = [set() for _ in range(r)]
    for v, color in enumerate(assignment):
        classes[color].add(v)
    ordered = sorted((frozenset(c) for c in classes), key=lambda c: (-len(c), sorted(c)))
    return EquitableColoring(tuple(ordered), r)


def _networkx_coloring(graph: Graph, r: int) -> EquitableColoring | None:
    """Hajnal–Szemerédi coloring from networkx; requires Δ + 1 ≤ r."""
    try:
        coloring = nx.equitable_color(graph.to_networkx(), r)
    except nx.NetworkXAlgorithmError as e:
        logger.debug(f"networkx equitable_color declined: {e}")
        return None
    result = _from_assignment([coloring[v] for v in range(graph.n)], r)
    return result if result.is_valid(graph) else None


def _greedy(graph: Graph, r: int) -> list[int] | None:
    """Proper r-coloring placing each vertex, by decreasing degree, in the smallest free class."""
    adj = graph.adjacency
    members = [0] * r
    assignment = [-1] * graph.n
    for v in sorted(range(graph.n), key=lambda u: (-graph.degrees[u], u)):
        free = [c for c in range(r) if not adj[v] & members[c]]
        if not free:
            return None
        color = min(free, key=lambda c: (members[c].bit_count(), c))
        members[color] |= 1 << v
        assignment[v] = color
    return assignment


def _balance(graph: Graph, assignment: list[int], r: int) -> list[int] | None:
    """
    Even out class sizes by moving vertices along chains of classes.

    Class X points to class Y when some vertex of X has no neighbour in Y.
    A chain from a largest class to a smallest one moves one vertex per
    link, shrinking the first and growing the last.
    """
    adj = graph.adjacency
    members = [0] * r
    for v, color in enumerate(assignment):
        members[color] |= 1 << v

    for _ in range(graph.n * r + 1):
        sizes = [m.bit_count() for m in members]
        if max(sizes) - min(sizes) <= 1:
            result = [0] * graph.n
            for color, m in enumerate(members):
                for v in iter_bits(m):
                    result[v] = color
            return result
        big = min(range(r), key=lambda c: (-sizes[c], c))
        small = min(range(r), key=lambda c: (sizes[c], c))

        # BFS over classes; mover[y] = (class it came from, vertex moved into y)
        mover: dict[int, tuple[int, int]] = {}
        frontier = [big]
        reached = {big}
        while frontier and small not in reached:
            nxt = []
            for x in frontier:
                for y in range(r):
                    if y in reached:
                        continue
                    movable = [v for v in iter_bits(members[x]) if not adj[v] & members[y]]
                    if movable:
                        mover[y] = (x, movable[0])
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if small not in reached:
            return None
        chain = []
        y = small
        while y != big:
            x, v = mover[y]
            chain.append((x, y, v))
            y = x
        for x, y, v in reversed(chain):
            members[x] &= ~(1 << v)
            members[y] |= 1 << v
    return None


class _ExactSearch:
    """Backtracking over vertices with capacity-constrained classes."""

    def __init__(self, graph: Graph, r: int, node_limit: int):
        self.graph = graph
        self.r = r
        self.node_limit = node_limit
        self.nodes = 0
        n = graph.n
        self.low, self.extra = divmod(n, r)
        self.order = sorted(range(n), key=lambda v: (-graph.degrees[v], v))
        self.members = [0] * r
        self.assignment = [-1] * n

    def run(self) -> list[int] | None:
        return list(self.assignment) if self._place(0, 0) else None

    def _place(self, index: int, full: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise EquitableColoringUndetermined("equitable_nodes", self.node_limit)
        if index == len(self.order):
            return True
        v = self.order[index]
        adj = self.graph.adjacency[v]
        tried_empty = False
        for color in range(self.r):
            members = self.members[color]
            size = members.bit_count()
            if adj & members:
                continue
            if size == 0:
                if tried_empty:
                    continue
                tried_empty = True
            if size == self.low + 1 or (size == self.low and full >= self.extra):
                continue
            self.members[color] |= 1 << v
            self.assignment[v] = color
            if self._place(index + 1, full + (1 if size + 1 == self.low + 1 else 0)):
                return True
            self.members[color] &= ~(1 << v)
            self.assignment[v] = -1
        return False


def equitable_coloring(
    graph: Graph, r: int, budgets: SearchBudgets | None = None
) -> EquitableColoring | None:
    """
    Find an equitable r-coloring.

    Always succeeds when Δ(G) + 1 ≤ r. Otherwise a greedy coloring is
    balanced by moving vertices along chains of classes, and graphs with at
    most 15 vertices fall back to exact search.

    Args:
        graph: Input graph
        r: Number of classes, at least 1
        budgets: Uses equitable_nodes for the exact search

    Returns:
        An EquitableColoring, or None if none exists

    Raises:
        InvalidParameterError: If r < 1
        EquitableColoringUndetermined: If the heuristics fail and the exact
            search is unavailable or runs out of budget

    Example:
        >>> equitable_coloring(empty_graph(6), 3).sizes
        [2, 2, 2]
    """
    budgets = budgets or SearchBudgets()
    if r < 1:
        raise InvalidParameterError(f"r must be positive, got {r}")
    n = graph.n
    if n == 0:
        return EquitableColoring(tuple(frozenset() for _ in range(r)), r)
    if r >= n:
        return _from_assignment(list(range(n)), r)

    if max(graph.degrees) + 1 <= r:
        found = _networkx_coloring(graph, r)
        if found is not None:
            return found

    greedy = _greedy(graph, r)
    if greedy is not None:
        balanced = _balance(graph, greedy, r)
        if balanced is not None:
            return _from_assignment(balanced, r)

    if n > EXACT_SEARCH_MAX_VERTICES:
        raise EquitableColoringUndetermined("equitable_exact_vertices", EXACT_SEARCH_MAX_VERTICES)
    search = _ExactSearch(graph, r, budgets.equitable_nodes)
    assignment = search.run()
    logger.debug(f"equitable_coloring exact search n={n} r={r} nodes={search.nodes}")
    return _from_assignment(assignment, r) if assignment is not None else None


def has_k_triangle_partition(
    graph: Graph, k: int, budgets: SearchBudgets | None = None
) -> Decision:
    """
    Decide whether a graph on 3k vertices splits into k disjoint triangles.

    Fast paths: σ₂(G) ≥ 4k − 1 (then θ of the complement is at most 2k − 1);
    δ(G) ≥ 2k − 1 with α(G) ≤ k for k ≥ 3, where the only no-instance is
    2K_k ∨ K̄_k for odd k. Otherwise the complement is equitably k-colored.

    Args:
        graph: Graph with exactly 3k vertices
        k: Number of triangles
        budgets: Search budgets

    Returns:
        Decision; a HasKCycles verdict carries the triangles when they were
        constructed, and Unknown means the coloring search was undetermined

    Raises:
        InvalidParameterError: If k < 1 or |G| ≠ 3k
    """
    budgets = budgets or SearchBudgets()
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    if graph.n != 3 * k:
        raise InvalidParameterError(f"triangle partition needs n = 3k = {3 * k}, got n={graph.n}")

    stats = degree_stats(graph)
    trail: list[RuleApplication] = []

    def witness() -> CyclePacking | None:
        try:
            coloring = equitable_coloring(complement(graph), k, budgets)
        except EquitableColoringUndetermined:
            return None
        if coloring is None:
            return None
        return CyclePacking.from_cycles(graph, [tuple(sorted(c)) for c in coloring.classes])

    if stats.sigma2 >= 4 * k - 1:
        ore = f"θ(Ḡ) = {6 * k} − σ₂ − 2 ≤ {2 * k - 1}"
        trail.append(RuleApplication("Ore", ore, applied=True))
        return Decision(Verdict.HAS_K_CYCLES, tuple(trail), witness())
    trail.append(RuleApplication("Ore", f"σ₂={int(stats.sigma2)} < {4 * k - 1}"))

    # For k = 2 the complement may be C₅ + K₁, which has no equitable 2-coloring.
    dense = k >= 3 and stats.delta >= 2 * k - 1
    try:
        small_alpha = dense and independence_number(graph, threshold=k, budgets=budgets).size <= k
        exception = is_exceptional(graph, k, budgets) if small_alpha and k % 2 == 1 else None
    except BudgetExceededError as e:
        logger.warning(f"has_k_triangle_partition: C14 test undetermined: {e}")
        trail.append(RuleApplication("C14", f"undetermined: {e}"))
    else:
        if exception is ExceptionKind.TWO_KK_JOIN_KKBAR:
            trail.append(RuleApplication("C14", f"G ≅ 2K_{k} ∨ K̄_{k}", applied=True))
            return Decision(Verdict.NO_K_CYCLES, tuple(trail))
        if small_alpha:
            bounds = f"δ={stats.delta} ≥ {2 * k - 1}, α ≤ {k}"
            trail.append(RuleApplication("C14", bounds, applied=True))
            return Decision(Verdict.HAS_K_CYCLES, tuple(trail), witness())
        trail.append(RuleApplication("C14", "k < 3, or degree or independence bound fails"))

    try:
        coloring = equitable_coloring(complement(graph), k, budgets)
    except EquitableColoringUndetermined as e:
        trail.append(RuleApplication("equitable", f"undetermined: {e}"))
        return Decision(Verdict.UNKNOWN, tuple(trail))
    if coloring is None:
        missing = f"complement has no equitable {k}-coloring"
        trail.append(RuleApplication("equitable", missing, applied=True))
        return Decision(Verdict.NO_K_CYCLES, tuple(trail))
    triangles = [tuple(sorted(c)) for c in coloring.classes]
    packing = CyclePacking.from_cycles(graph, triangles)
    colored = f"complement colored into {k} classes of 3"
    trail.append(RuleApplication("equitable", colored, applied=True))
    return Decision(Verdict.HAS_K_CYCLES, tuple(trail), packing)

