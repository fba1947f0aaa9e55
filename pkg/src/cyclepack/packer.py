"""Disjoint-cycle packer built on lexicographic local improvement.

The packer seeds k triangles using at most 3k helper edges, improves the
packing to a local optimum, and removes the helper edges one at a time.
Packings are ranked by the optimality key: more cycles, then smaller total
length, then a longer path in the remainder, then more remainder edges.
When fewer than k cycles survive, the exact oracle is consulted on small
inputs before a certificate of impossibility is extracted.
"""

import logging
from collections import Counter
from itertools import combinations

from cyclepack.config import SearchBudgets
from cyclepack.cycles import Cycle, cycles_of_length, longest_path, shortest_cycle
from cyclepack.exceptions import BudgetExceededError, InvalidPackingError, InvalidParameterError
from cyclepack.graph import Graph, degree_stats, mask_of
from cyclepack.hypotheses import check_hypotheses, is_exceptional
from cyclepack.models import (
    CandidateCounterexample,
    CyclePacking,
    ExceptionalGraph,
    HypothesisReport,
    HypothesisViolation,
    IndependentSetCertificate,
    OptimalityKey,
    PackerDiagnostics,
    PackerResult,
    Packing,
    ValidationResult,
)
from cyclepack.oracle import max_packing_within, oracle_max_packing

logger = logging.getLogger(__name__)

Edge = tuple[int, int]

MOVE_ADD = "add-cycle"
MOVE_SHORTEN = "shorten"
MOVE_EXCHANGE = "exchange"
MOVE_REBALANCE = "rebalance"


def optimality_key(
    graph: Graph, packing: CyclePacking, budgets: SearchBudgets | None = None
) -> OptimalityKey:
    """
    Compute the optimality key of a packing.

    Args:
        graph: Host graph
        packing: A packing valid for graph
        budgets: Uses longest_path_nodes

    Returns:
        OptimalityKey; o3_exact is False if the longest-path search ran out of
        budget and o3 is the best lower bound found

    Example:
        >>> k6 = complete_graph(6)
        >>> optimality_key(k6, CyclePacking.from_cycles(k6, [(0, 1, 2, 3)])).as_tuple()
        (1, 4, 2, 1)
    """
    budgets = budgets or SearchBudgets()
    remainder = packing.remainder_mask
    path = longest_path(graph, remainder, budgets.longest_path_nodes)
    return OptimalityKey(
        o1=packing.size,
        o2=packing.total_length,
        o3=path.vertices,
        o4=graph.induced_edge_count(remainder),
        o3_exact=path.exact,
    )


def attachment_cycle_bound(graph: Graph, cycle: Cycle, remainder: int) -> int | None:
    """
    Length of the shortest cycle made of a remainder vertex and an arc of cycle.

    A remainder vertex w with two neighbours on the cycle closes a cycle with
    the shorter arc between them; this is the bound used to cap the search
    for a shorter replacement.
    """
    position = {v: i for i, v in enumerate(cycle)}
    length = len(cycle)
    best: int | None = None
    for w in range(graph.n):
        if not remainder >> w & 1:
            continue
        spots = sorted(position[v] for v in cycle if graph.adjacency[w] >> v & 1)
        if len(spots) < 2:
            continue
        gaps = [b - a for a, b in zip(spots, spots[1:], strict=False)]
        gaps.append(spots[0] + length - spots[-1])
        candidate = min(gaps) + 2
        best = candidate if best is None else min(best, candidate)
    return best


class _Improver:
    """First-improvement local search over the move catalogue."""

    def __init__(
        self,
        graph: Graph,
        budgets: SearchBudgets,
        use_attachment_bound: bool = True,
    ):
        self.graph = graph
        self.budgets = budgets
        self.use_attachment_bound = use_attachment_bound
        self.iterations = 0
        self.moves: Counter[str] = Counter()
        self.skipped: list[str] = []
        self.cap_exhausted = False

    def key(self, packing: CyclePacking) -> OptimalityKey:
        return optimality_key(self.graph, packing, self.budgets)

    def length_cap(self, packing: CyclePacking) -> int:
        if self.budgets.cycle_length_cap is not None:
            return self.budgets.cycle_length_cap
        return max([6] + [len(c) for c in packing.cycles])

    def step(self, packing: CyclePacking) -> CyclePacking | None:
        for name, move in (
            (MOVE_ADD, self.add_cycle),
            (MOVE_SHORTEN, self.shorten),
            (MOVE_EXCHANGE, self.exchange),
            (MOVE_REBALANCE, self.rebalance),
        ):
            improved = move(packing)
            if improved is not None:
                self.moves[name] += 1
                logger.debug(
                    f"improve: {name} -> {improved.size} cycles, length {improved.total_length}"
                )
                return improved
        return None

    def run(self, packing: CyclePacking, cap: int) -> CyclePacking:
        while self.iterations < cap:
            improved = self.step(packing)
            if improved is None:
                return packing
            packing = improved
            self.iterations += 1
        self.cap_exhausted = True
        logger.warning(f"improvement cap of {cap} iterations reached")
        return packing

    def add_cycle(self, packing: CyclePacking) -> CyclePacking | None:
        cycle = shortest_cycle(self.graph, packing.remainder_mask)
        if cycle is None:
            return None
        return CyclePacking.from_cycles(self.graph, packing.cycles + (cycle,))

    def shorten(self, packing: CyclePacking) -> CyclePacking | None:
        remainder = packing.remainder_mask
        cap = self.budgets.cycle_length_cap
        for i, cycle in enumerate(packing.cycles):
            if len(cycle) == 3:
                continue
            limit = len(cycle) - 1
            if cap is not None:
                limit = min(limit, cap)
            if self.use_attachment_bound:
                bound = attachment_cycle_bound(self.graph, cycle, remainder)
                if bound is not None:
                    limit = min(limit, bound)
            found = shortest_cycle(self.graph, mask_of(cycle) | remainder, limit)
            if found is not None and len(found) < len(cycle):
                return packing.replace(self.graph, [i], [found])
        return None

    def exchange(self, packing: CyclePacking) -> CyclePacking | None:
        remainder = packing.remainder_mask
        for width in range(1, self.budgets.exchange_width + 1):
            for chosen in combinations(range(packing.size), width):
                mask = remainder
                for i in chosen:
                    mask |= mask_of(packing.cycles[i])
                try:
                    found = max_packing_within(
                        self.graph,
                        mask,
                        width + 1,
                        self.budgets.pair_exchange_states,
                        "pair_exchange_states",
                    )
                except BudgetExceededError as e:
                    note = f"{MOVE_EXCHANGE} on cycles {list(chosen)}: {e}"
                    logger.warning(f"skipped {note}")
                    self.skipped.append(note)
                    continue
                if len(found) == width + 1:
                    return packing.replace(self.graph, list(chosen), list(found))
        return None

    def rebalance(self, packing: CyclePacking) -> CyclePacking | None:
        remainder = packing.remainder_mask
        cap = self.length_cap(packing)
        current = self.key(packing)
        for i, cycle in enumerate(packing.cycles):
            if len(cycle) > cap:
                continue
            own = mask_of(cycle)
            best: CyclePacking | None = None
            best_key = current
            same_length = cycles_of_length(self.graph, own | remainder, len(cycle))
            for seen, candidate in enumerate(same_length):
                if seen >= self.budgets.m4_candidates:
                    break
                if mask_of(candidate) == own:
                    continue
                trial = packing.replace(self.graph, [i], [candidate])
                trial_key = self.key(trial)
                if trial_key.beats(best_key):
                    best, best_key = trial, trial_key
            if best is not None:
                return best
        return None

    def diagnostics(
        self, helper_edges: int, oracle_used: bool, key: OptimalityKey | None
    ) -> PackerDiagnostics:
        return PackerDiagnostics(
            iterations=self.iterations,
            helper_edges=helper_edges,
            moves=dict(self.moves),
            skipped_moves=tuple(self.skipped),
            cap_exhausted=self.cap_exhausted,
            oracle_used=oracle_used,
            key=key,
        )


def improve_step(
    graph: Graph, packing: CyclePacking, budgets: SearchBudgets | None = None
) -> CyclePacking | None:
    """
    Apply the first improving move, if any.

    Moves are tried in order: add a cycle found in the remainder; replace a
    cycle by a strictly shorter one inside its vertices plus the remainder;
    replace up to ``exchange_width`` cycles by one more cycle inside their
    vertices plus the remainder; replace a cycle by an equal-length one that
    lengthens the remainder's longest path or adds remainder edges.

    Args:
        graph: Host graph
        packing: Current packing, valid for graph
        budgets: Search budgets

    Returns:
        A packing whose key strictly beats the input's, or None at a local optimum
    """
    budgets = budgets or SearchBudgets()
    packing.validate(graph)
    return _Improver(graph, budgets).step(packing)


def _cycle_edges(cycle: Cycle) -> set[Edge]:
    return {
        (min(u, v), max(u, v)) for u, v in zip(cycle, cycle[1:] + cycle[:1], strict=True)
    }


def _bootstrap(graph: Graph, k: int) -> tuple[list[Cycle], list[Edge]]:
    """k triangles on the 3k highest-degree vertices, with the missing edges as helpers."""
    order = sorted(range(graph.n), key=lambda v: (-graph.degrees[v], v))[: 3 * k]
    triangles: list[Cycle] = []
    helpers: list[Edge] = []
    for i in range(k):
        a, b, c = order[3 * i : 3 * i + 3]
        triangles.append((a, b, c))
        for u, v in ((a, b), (a, c), (b, c)):
            if not graph.has_edge(u, v):
                helpers.append((min(u, v), max(u, v)))
    return triangles, helpers


def _hypothesis_violations(report: HypothesisReport) -> tuple[str, ...]:
    violated = []
    if not report.ch_i:
        violated.append("n<3k")
    if not report.h1:
        violated.append("h1")
    if not report.h2:
        violated.append("h2")
    if report.k < 3:
        violated.append("k<3")
    return tuple(violated)


def find_disjoint_cycles(
    graph: Graph, k: int, budgets: SearchBudgets | None = None
) -> PackerResult:
    """
    Find k vertex-disjoint cycles or a certificate that none exist.

    Args:
        graph: Input graph with at least one vertex
        k: Number of cycles wanted (0 returns an empty packing)
        budgets: Search budgets

    Returns:
        Packing, IndependentSetCertificate, ExceptionalGraph,
        HypothesisViolation, or CandidateCounterexample

    Raises:
        InvalidParameterError: If k is negative or the graph is empty

    Example:
        >>> find_disjoint_cycles(complete_graph(10), 3).kind
        <ResultKind.PACKING: 'packing'>
    """
    budgets = budgets or SearchBudgets()
    if k < 0:
        raise InvalidParameterError(f"k must be non-negative, got {k}")
    if graph.n == 0:
        raise InvalidParameterError("find_disjoint_cycles needs at least one vertex")
    if k == 0:
        return Packing(CyclePacking.empty(graph))
    if graph.n < 3 * k:
        report = check_hypotheses(graph, k, budgets)
        return HypothesisViolation(report, _hypothesis_violations(report))

    n = graph.n
    cap = budgets.iteration_factor * n**4
    triangles, helpers = _bootstrap(graph, k)
    helper_count = len(helpers)
    work = graph.with_edges(helpers)
    improver = _Improver(work, budgets)
    packing = improver.run(CyclePacking.from_cycles(work, triangles), cap)
    logger.debug(f"bootstrap: {k} triangles with {helper_count} helper edges")

    while True:
        on_cycles = set().union(*(_cycle_edges(c) for c in packing.cycles))
        free = [h for h in helpers if h not in on_cycles]
        if free:
            work = work.without_edges(free)
            helpers = [h for h in helpers if h in on_cycles]
        clean = [c for c in packing.cycles if not _cycle_edges(c) & set(helpers)]
        if len(clean) >= k or not helpers or improver.cap_exhausted:
            break
        helper = helpers.pop(0)
        work = work.without_edges([helper])
        kept = [c for c in packing.cycles if helper not in _cycle_edges(c)]
        improver.graph = work
        packing = improver.run(CyclePacking.from_cycles(work, kept), cap)
        logger.debug(f"removed helper {helper}: {packing.size} cycles, {len(helpers)} helpers left")

    if len(clean) < k and not helpers and not improver.cap_exhausted:
        improver.graph = graph
        packing = improver.run(CyclePacking.from_cycles(graph, clean), cap)
        clean = list(packing.cycles)

    if len(clean) >= k:
        final = CyclePacking.from_cycles(graph, clean[:k])
        key = optimality_key(graph, final, budgets)
        diagnostics = improver.diagnostics(helper_count, False, key)
        logger.info(f"find_disjoint_cycles n={n} k={k}: packing after {improver.iterations} steps")
        return Packing(final, diagnostics)

    stalled = CyclePacking.from_cycles(graph, clean)
    oracle_used = False
    if n <= budgets.oracle_max_vertices:
        oracle_used = True
        try:
            exact = oracle_max_packing(graph, stop_at=k, budgets=budgets)
            if exact.at_least(k):
                final = CyclePacking.from_cycles(graph, exact.cycles[:k])
                key = optimality_key(graph, final, budgets)
                diagnostics = improver.diagnostics(helper_count, True, key)
                logger.info(f"find_disjoint_cycles n={n} k={k}: packing from exact search")
                return Packing(final, diagnostics)
        except BudgetExceededError as e:
            logger.warning(f"exact fallback undecided: {e}")

    key = optimality_key(graph, stalled, budgets)
    diagnostics = improver.diagnostics(helper_count, oracle_used, key)
    report = check_hypotheses(graph, k, budgets)
    if report.h3 is False and report.alpha_witness is not None:
        size = len(report.alpha_witness)
        logger.info(f"find_disjoint_cycles n={n} k={k}: independent set of size {size}")
        return IndependentSetCertificate(report.alpha_witness, diagnostics)
    exception = is_exceptional(graph, k, budgets)
    if exception is not None:
        logger.info(f"find_disjoint_cycles n={n} k={k}: exceptional graph {exception.value}")
        return ExceptionalGraph(exception, diagnostics)
    violated = _hypothesis_violations(report)
    if violated:
        logger.info(f"find_disjoint_cycles n={n} k={k}: hypotheses fail {violated}")
        return HypothesisViolation(report, violated, diagnostics)
    logger.warning(f"find_disjoint_cycles n={n} k={k}: stalled at {stalled.size} cycles")
    return CandidateCounterexample(stalled, diagnostics)


def validate_result(
    graph: Graph, k: int, result: PackerResult, budgets: SearchBudgets | None = None
) -> ValidationResult:
    """
    Independently re-check a packer result against its input.

    Returns:
        ValidationResult; falsy with a reason code when the result does not hold

    Example:
        >>> pair = IndependentSetCertificate(frozenset({0, 1}))
        >>> validate_result(complete_graph(10), 3, pair).reason
        'not-independent'
    """
    n = graph.n
    if isinstance(result, Packing):
        try:
            result.packing.validate(graph)
        except InvalidPackingError as e:
            return ValidationResult(False, e.reason)
        if result.packing.size != k:
            return ValidationResult(False, "wrong-count")
        return ValidationResult(True)

    if isinstance(result, IndependentSetCertificate):
        if any(not 0 <= v < n for v in result.vertices):
            return ValidationResult(False, "bad-vertex")
        if not graph.is_independent(result.vertices):
            return ValidationResult(False, "not-independent")
        if len(result.vertices) < n - 2 * k + 1:
            return ValidationResult(False, "too-small")
        return ValidationResult(True)

    if isinstance(result, ExceptionalGraph):
        if is_exceptional(graph, k, budgets) is not result.exception:
            return ValidationResult(False, "not-exceptional")
        return ValidationResult(True)

    if isinstance(result, HypothesisViolation):
        report = result.report
        if report.n != n or report.k != k or not result.violated:
            return ValidationResult(False, "report-mismatch")
        sigma2 = degree_stats(graph).sigma2
        checks = {
            "n<3k": n < 3 * k,
            "h1": n < 3 * k + 1,
            "h2": sigma2 < 4 * k - 3,
            "k<3": k < 3,
        }
        for name in result.violated:
            if not checks.get(name, False):
                return ValidationResult(False, f"{name}-holds")
        return ValidationResult(True)

    if isinstance(result, CandidateCounterexample):
        try:
            result.packing.validate(graph)
        except InvalidPackingError as e:
            return ValidationResult(False, e.reason)
        if result.packing.size >= k:
            return ValidationResult(False, "not-stalled")
        return ValidationResult(True, "candidate")

    return ValidationResult(False, "unknown-result")
