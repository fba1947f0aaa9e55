"""Theorem verification over graph streams.

Each TheoremCheck evaluates one graph at a time: it decides whether the
theorem's hypotheses hold, predicts the answer the theorem gives, and then
checks the prediction against an independent ground truth (a validated
packing from the packer, or the exact oracle for no-instances). Results
are collected into a VerificationReport; reports over disjoint chunks of a
stream merge associatively and commutatively, which is what the optional
process pool relies on.
"""

import logging
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from itertools import islice

from cyclepack.config import SearchBudgets
from cyclepack.decide import decide
from cyclepack.equitable import has_k_triangle_partition, theta
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.graph import Graph, complement, degree_stats, iter_bits, lowest_bit
from cyclepack.graph6 import emit_graph6
from cyclepack.hypotheses import (
    alpha_exceeds,
    find_wheel_hub,
    is_exceptional,
    structural_independent_set,
)
from cyclepack.lovasz import classify_no_two_cycles, verify_family_witness
from cyclepack.models import ExceptionKind, Packing, Verdict
from cyclepack.oracle import oracle_max_packing
from cyclepack.packer import find_disjoint_cycles, validate_result

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 64


class TheoremId(str, Enum):
    """Statements the verifier can check."""

    T1 = "T1"
    T2 = "T2"
    T4 = "T4"
    T9 = "T9"
    L16 = "L16"
    C14 = "C14"
    H3_NECESSITY = "H3-necessity"

    @classmethod
    def parse(cls, value: str) -> "TheoremId":
        """Case-insensitive lookup by value."""
        for member in cls:
            if member.value.lower() == value.strip().lower():
                return member
        valid = ", ".join(m.value for m in cls)
        raise InvalidParameterError(f"unknown theorem '{value}' (expected one of {valid})")


class VerificationMode(str, Enum):
    """Whether the stream is an exhaustive enumeration or a seeded sample."""

    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class Outcome(str, Enum):
    """Per-graph verification outcome."""

    PASS = "pass"
    EXCEPTIONAL = "exceptional"
    VACUOUS = "vacuous"
    SKIPPED = "skipped"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True, order=True)
class GraphRecord:
    """
    Outcome for one graph.

    Attributes:
        graph6: The graph, graph6-encoded
        outcome: What the check concluded
        reason: Short human-readable explanation
    """

    graph6: str
    outcome: Outcome
    reason: str


@dataclass(frozen=True)
class TheoremCheck:
    """
    A theorem instance to verify.

    Attributes:
        theorem: Which statement to check
        k: Number of cycles (ignored by L16, which is always k = 2)
    """

    theorem: TheoremId
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParameterError(f"k must be positive, got {self.k}")
        if self.theorem is TheoremId.L16 and self.k != 2:
            raise InvalidParameterError("L16 is a statement about k = 2")
        if self.theorem is TheoremId.T9 and self.k < 3:
            raise InvalidParameterError("T9 needs k >= 3")
        if self.theorem is TheoremId.T2 and self.k < 2:
            raise InvalidParameterError("T2 needs k >= 2")

    def evaluate(self, graph: Graph, budgets: SearchBudgets | None = None) -> GraphRecord:
        """
        Check the statement on one graph.

        Budget exhaustion anywhere in the evaluation yields a SKIPPED
        record; it never counts as a pass.
        """
        budgets = budgets or SearchBudgets()
        code = emit_graph6(graph)
        try:
            outcome, reason = _EVALUATORS[self.theorem](graph, self.k, budgets)
        except BudgetExceededError as e:
            logger.warning(f"{self.theorem.value}: skipping {code}: {e}")
            outcome, reason = Outcome.SKIPPED, str(e)
        return GraphRecord(code, outcome, reason)


@dataclass(frozen=True)
class VerificationReport:
    """
    Aggregated verification results.

    Every record other than a PASS is kept individually, in sorted
    order, so that merging is order-independent.

    Attributes:
        theorem: The checked statement
        k: Its parameter
        mode: Exhaustive or sampled
        seed: Seed of a sampled stream, embedded for replay
        counts: Number of graphs per outcome
        records: Every non-passing record
    """

    theorem: TheoremId
    k: int
    mode: VerificationMode
    seed: int | None = None
    counts: dict[Outcome, int] = field(default_factory=dict)
    records: tuple[GraphRecord, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def counterexamples(self) -> tuple[GraphRecord, ...]:
        return tuple(r for r in self.records if r.outcome is Outcome.COUNTEREXAMPLE)

    @property
    def exceptional(self) -> tuple[GraphRecord, ...]:
        return tuple(r for r in self.records if r.outcome is Outcome.EXCEPTIONAL)

    @property
    def skipped(self) -> tuple[GraphRecord, ...]:
        return tuple(r for r in self.records if r.outcome is Outcome.SKIPPED)

    @property
    def passed(self) -> bool:
        """True iff no counterexample was recorded."""
        return not self.counterexamples

    def count(self, outcome: Outcome) -> int:
        return self.counts.get(outcome, 0)

    def extend(self, records: Iterable[GraphRecord]) -> "VerificationReport":
        """Return a report that also includes the given per-graph records."""
        batch = list(records)
        counts: dict[Outcome, int] = {}
        for record in batch:
            counts[record.outcome] = counts.get(record.outcome, 0) + 1
        kept = tuple(r for r in batch if r.outcome is not Outcome.PASS)
        return self.merge(
            VerificationReport(self.theorem, self.k, self.mode, self.seed, counts, kept)
        )

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """
        Combine two reports over disjoint parts of a stream.

        Raises:
            InvalidParameterError: If the reports are for different checks
        """
        if (self.theorem, self.k, self.mode, self.seed) != (
            other.theorem,
            other.k,
            other.mode,
            other.seed,
        ):
            raise InvalidParameterError("cannot merge reports of different checks")
        counts = dict(self.counts)
        for outcome, value in other.counts.items():
            counts[outcome] = counts.get(outcome, 0) + value
        ordered = {o: counts[o] for o in Outcome if o in counts}
        return VerificationReport(
            self.theorem,
            self.k,
            self.mode,
            self.seed,
            ordered,
            tuple(sorted(self.records + other.records)),
        )


# Per-theorem evaluators: (graph, k, budgets) -> (outcome, reason)


def _fmt(value: float) -> str:
    return "∞" if value == float("inf") else str(int(value))


def _expect_packing(
    graph: Graph, k: int, budgets: SearchBudgets, claim: str
) -> tuple[Outcome, str]:
    """The statement predicts k disjoint cycles; the packer must produce them."""
    result = find_disjoint_cycles(graph, k, budgets)
    if not isinstance(result, Packing):
        return Outcome.COUNTEREXAMPLE, f"{claim}, but packer returned {result.kind.value}"
    checked = validate_result(graph, k, result, budgets)
    if not checked:
        return Outcome.COUNTEREXAMPLE, f"{claim}, but packing is invalid ({checked.reason})"
    verdict = decide(graph, k, budgets).verdict
    if verdict is Verdict.NO_K_CYCLES:
        return Outcome.COUNTEREXAMPLE, f"{claim}, but decide answered {verdict.value}"
    return Outcome.PASS, f"{k} disjoint cycles found"


def _expect_no_packing(
    graph: Graph, k: int, budgets: SearchBudgets, claim: str, outcome: Outcome
) -> tuple[Outcome, str]:
    """The statement predicts no k disjoint cycles; the exact oracle must agree."""
    if graph.n > budgets.oracle_max_vertices:
        return Outcome.SKIPPED, f"{claim}; n={graph.n} exceeds the oracle limit"
    exact = oracle_max_packing(graph, stop_at=k, budgets=budgets)
    if exact.at_least(k):
        return Outcome.COUNTEREXAMPLE, f"{claim}, but oracle found {k} disjoint cycles"
    verdict = decide(graph, k, budgets).verdict
    if verdict is Verdict.HAS_K_CYCLES:
        return Outcome.COUNTEREXAMPLE, f"{claim}, but decide answered {verdict.value}"
    return outcome, f"{claim}; oracle max {exact.count}"


def _check_t1(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    stats = degree_stats(graph)
    if graph.n < 3 * k:
        return Outcome.VACUOUS, f"n={graph.n} < {3 * k}"
    if stats.delta < 2 * k:
        return Outcome.VACUOUS, f"δ={stats.delta} < {2 * k}"
    return _expect_packing(graph, k, budgets, f"δ={stats.delta} ≥ {2 * k}")


def _check_t4(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    stats = degree_stats(graph)
    if graph.n < 3 * k:
        return Outcome.VACUOUS, f"n={graph.n} < {3 * k}"
    if stats.sigma2 < 4 * k - 1:
        return Outcome.VACUOUS, f"σ₂={_fmt(stats.sigma2)} < {4 * k - 1}"
    return _expect_packing(graph, k, budgets, f"σ₂={_fmt(stats.sigma2)} ≥ {4 * k - 1}")


def _check_t9(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    stats = degree_stats(graph)
    n = graph.n
    if n < 3 * k + 1:
        return Outcome.VACUOUS, f"n={n} < {3 * k + 1}"
    if stats.sigma2 < 4 * k - 3:
        return Outcome.VACUOUS, f"σ₂={_fmt(stats.sigma2)} < {4 * k - 3}"
    exception = is_exceptional(graph, k, budgets)
    if exception is not None and exception in (ExceptionKind.Y1, ExceptionKind.Y2):
        claim = f"G ≅ {exception.value}"
        return _expect_no_packing(graph, k, budgets, claim, Outcome.EXCEPTIONAL)
    found = alpha_exceeds(graph, n - 2 * k, budgets)
    if found.exceeds(n - 2 * k):
        return _expect_no_packing(
            graph, k, budgets, f"α ≥ {found.size} > n−2k={n - 2 * k}", Outcome.PASS
        )
    claim = f"σ₂={_fmt(stats.sigma2)} ≥ {4 * k - 3}, α ≤ n−2k"
    return _expect_packing(graph, k, budgets, claim)


def _check_t2(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    stats = degree_stats(graph)
    n = graph.n
    if n < 3 * k:
        return Outcome.VACUOUS, f"n={n} < {3 * k}"
    if stats.delta < 2 * k - 1:
        return Outcome.VACUOUS, f"δ={stats.delta} < {2 * k - 1}"
    witness = structural_independent_set(graph, k)
    if witness is not None:
        return _expect_no_packing(
            graph, k, budgets, f"α ≥ {len(witness)} > n−2k={n - 2 * k}", Outcome.PASS
        )
    if k == 2 and find_wheel_hub(graph) is not None:
        return _expect_no_packing(graph, k, budgets, "G is a wheel", Outcome.EXCEPTIONAL)
    odd_exception = k % 2 == 1 and n == 3 * k
    if odd_exception and is_exceptional(graph, k, budgets) is ExceptionKind.TWO_KK_JOIN_KKBAR:
        claim = f"G ≅ 2K_{k} ∨ K̄_{k}"
        return _expect_no_packing(graph, k, budgets, claim, Outcome.EXCEPTIONAL)
    return _expect_packing(graph, k, budgets, f"δ={stats.delta} ≥ {2 * k - 1}, α ≤ n−2k")


def _check_l16(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    stats = degree_stats(graph)
    if graph.n < 6:
        return Outcome.VACUOUS, f"n={graph.n} < 6"
    if stats.sigma2 < 5:
        return Outcome.VACUOUS, f"σ₂={_fmt(stats.sigma2)} < 5"
    if graph.n > budgets.oracle_max_vertices:
        return Outcome.SKIPPED, f"n={graph.n} exceeds the oracle limit"
    family = classify_no_two_cycles(graph)
    has_two = oracle_max_packing(graph, stop_at=2, budgets=budgets).at_least(2)
    if family is None and not has_two:
        return Outcome.COUNTEREXAMPLE, "no family matched, but oracle max < 2"
    if family is not None and has_two:
        return Outcome.COUNTEREXAMPLE, f"matched {family.kind.value}, but oracle found 2 cycles"
    if family is not None:
        if not verify_family_witness(graph, family):
            return Outcome.COUNTEREXAMPLE, f"witness for {family.kind.value} does not re-validate"
        label = f" ({family.label.value})" if family.label else ""
        return Outcome.PASS, f"{family.kind.value}{label}; oracle max < 2"
    return Outcome.PASS, "no family; oracle found 2 cycles"


def triangle_factor(graph: Graph) -> list[tuple[int, int, int]] | None:
    """
    Exhaustive search for a partition of V into triangles.

    The lowest uncovered vertex is always placed first, so each partition
    is visited once.

    Returns:
        Triangles covering every vertex, or None if none exist
    """
    if graph.n % 3:
        return None
    adj = graph.adjacency

    def place(free: int) -> list[tuple[int, int, int]] | None:
        if not free:
            return []
        v = lowest_bit(free)
        rest = free & ~(1 << v)
        candidates = adj[v] & rest
        for u in iter_bits(candidates):
            for w in iter_bits(candidates & adj[u] & ~((1 << (u + 1)) - 1)):
                found = place(rest & ~(1 << u) & ~(1 << w))
                if found is not None:
                    return [(v, u, w), *found]
        return None

    return place(graph.full_mask)


def _check_c14(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    n = graph.n
    if n != 3 * k:
        return Outcome.VACUOUS, f"n={n} ≠ {3 * k}"
    stats = degree_stats(graph)
    if 0 < graph.edge_count < n * (n - 1) // 2:
        expected = 2 * n - stats.sigma2 - 2
        if theta(complement(graph)) != expected:
            return Outcome.COUNTEREXAMPLE, f"θ(Ḡ) ≠ 2n − σ₂ − 2 = {_fmt(expected)}"

    decision = has_k_triangle_partition(graph, k, budgets)
    if decision.verdict is Verdict.UNKNOWN:
        return Outcome.SKIPPED, decision.justification
    truth = triangle_factor(graph) is not None
    claimed = decision.verdict is Verdict.HAS_K_CYCLES
    if claimed != truth:
        return Outcome.COUNTEREXAMPLE, f"{decision.verdict.value} but exact search says {truth}"
    if decision.witness is not None and any(len(c) != 3 for c in decision.witness.cycles):
        return Outcome.COUNTEREXAMPLE, "witness contains a cycle that is not a triangle"

    if not truth and stats.delta >= 2 * k - 1 and not alpha_exceeds(graph, k, budgets).exceeds(k):
        if is_exceptional(graph, k, budgets) is ExceptionKind.TWO_KK_JOIN_KKBAR:
            return Outcome.EXCEPTIONAL, f"G ≅ 2K_{k} ∨ K̄_{k}"
        return Outcome.COUNTEREXAMPLE, f"no triangle factor with δ ≥ {2 * k - 1}, α ≤ {k}"
    return Outcome.PASS, decision.justification


def _check_h3_necessity(graph: Graph, k: int, budgets: SearchBudgets) -> tuple[Outcome, str]:
    if graph.n == 0 or graph.n < 3 * k:
        return Outcome.VACUOUS, f"n={graph.n} < {3 * k}"
    result = find_disjoint_cycles(graph, k, budgets)
    if not isinstance(result, Packing):
        return Outcome.VACUOUS, f"no {k} disjoint cycles ({result.kind.value})"
    threshold = graph.n - 2 * k
    found = alpha_exceeds(graph, threshold, budgets)
    if found.exceeds(threshold):
        return Outcome.COUNTEREXAMPLE, f"{k} disjoint cycles with α ≥ {found.size} > {threshold}"
    return Outcome.PASS, f"{k} disjoint cycles, α ≤ {threshold}"


_EVALUATORS = {
    TheoremId.T1: _check_t1,
    TheoremId.T2: _check_t2,
    TheoremId.T4: _check_t4,
    TheoremId.T9: _check_t9,
    TheoremId.L16: _check_l16,
    TheoremId.C14: _check_c14,
    TheoremId.H3_NECESSITY: _check_h3_necessity,
}


def _verify_chunk(
    graphs: list[Graph],
    check: TheoremCheck,
    mode: VerificationMode,
    seed: int | None,
    budgets: SearchBudgets,
) -> VerificationReport:
    report = VerificationReport(check.theorem, check.k, mode, seed)
    return report.extend(check.evaluate(graph, budgets) for graph in graphs)


def _chunks(stream: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    iterator = iter(stream)
    while chunk := list(islice(iterator, size)):
        yield chunk


def verify(
    stream: Iterable[Graph],
    check: TheoremCheck,
    mode: VerificationMode = VerificationMode.EXHAUSTIVE,
    seed: int | None = None,
    workers: int = 1,
    budgets: SearchBudgets | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> VerificationReport:
    """
    Evaluate a theorem check on every graph of a stream.

    Args:
        stream: Graphs to check
        check: Statement and parameter
        mode: Exhaustive or sampled; recorded in the report
        seed: Seed that produced a sampled stream; recorded in the report
        workers: Number of worker processes (1 evaluates in-process)
        budgets: Search budgets for every per-graph search
        chunk_size: Graphs per worker task

    Returns:
        The merged report; identical for any ordering of the same graphs

    Raises:
        InvalidParameterError: If workers or chunk_size is not positive

    Example:
        >>> verify([complete_graph(6)], TheoremCheck(TheoremId.T1, 2)).passed
        True
    """
    budgets = budgets or SearchBudgets()
    if workers < 1 or chunk_size < 1:
        raise InvalidParameterError(
            f"workers and chunk_size must be positive ({workers}, {chunk_size})"
        )
    if mode is VerificationMode.EXHAUSTIVE:
        seed = None

    empty = VerificationReport(check.theorem, check.k, mode, seed)
    if workers == 1:
        report = _verify_chunk(list(stream), check, mode, seed, budgets)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_verify_chunk, chunk, check, mode, seed, budgets)
                for chunk in _chunks(stream, chunk_size)
            ]
            report = reduce(VerificationReport.merge, (f.result() for f in futures), empty)

    logger.info(
        f"verify {check.theorem.value} k={check.k}: {report.total} graphs, "
        f"{len(report.counterexamples)} counterexamples, {report.count(Outcome.SKIPPED)} skipped"
    )
    return report
