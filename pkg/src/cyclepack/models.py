"""Result types shared by the packer, the characterizer and the verifier.

This module contains the packing, optimality key, packer result variants,
hypothesis report and decision types.
"""

from dataclasses import dataclass, field
from enum import Enum

from cyclepack.cycles import Cycle, canonical_cycle
from cyclepack.exceptions import InvalidPackingError
from cyclepack.graph import Graph, iter_bits, mask_of


class ResultKind(str, Enum):
    """Variants of a packer result."""

    PACKING = "packing"
    INDEPENDENT_SET = "independent-set"
    EXCEPTIONAL = "exceptional"
    HYPOTHESIS_VIOLATION = "hypothesis-violation"
    CANDIDATE_COUNTEREXAMPLE = "candidate-counterexample"


class ExceptionKind(str, Enum):
    """Exceptional graphs that satisfy the degree hypotheses without k disjoint cycles.

    Scope:
        - Y1, Y2: k = 3 and n = 10
        - Wheel: k = 2
        - TwoKkJoinKkBar: k odd and n = 3k
    """

    Y1 = "Y1"
    Y2 = "Y2"
    WHEEL = "Wheel"
    TWO_KK_JOIN_KKBAR = "TwoKkJoinKkBar"


class Verdict(str, Enum):
    """Tri-state answer to "does G have k disjoint cycles?"."""

    HAS_K_CYCLES = "HasKCycles"
    NO_K_CYCLES = "NoKCycles"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CyclePacking:
    """
    Vertex-disjoint cycles plus the remainder R = V minus the cycle vertices.

    Attributes:
        cycles: Cycles in canonical rotation, in the order they were found
        remainder: Vertices on no cycle
    """

    cycles: tuple[Cycle, ...]
    remainder: frozenset[int]

    @classmethod
    def from_cycles(cls, graph: Graph, cycles: list[Cycle] | tuple[Cycle, ...]) -> "CyclePacking":
        """
        Build and validate a packing for a host graph.

        Raises:
            InvalidPackingError: If a cycle is too short, uses a non-edge or
                shares a vertex with another cycle
        """
        normalised = tuple(canonical_cycle(c) for c in cycles)
        used = 0
        for cycle in normalised:
            used |= mask_of(cycle)
        packing = cls(normalised, frozenset(iter_bits(graph.full_mask & ~used)))
        packing.validate(graph)
        return packing

    @classmethod
    def empty(cls, graph: Graph) -> "CyclePacking":
        """The packing with no cycles."""
        return cls((), frozenset(range(graph.n)))

    @property
    def size(self) -> int:
        """Number of cycles."""
        return len(self.cycles)

    @property
    def total_length(self) -> int:
        """Sum of the cycle lengths."""
        return sum(len(c) for c in self.cycles)

    @property
    def covered_mask(self) -> int:
        """Bitset of the vertices on some cycle."""
        return mask_of(v for c in self.cycles for v in c)

    @property
    def remainder_mask(self) -> int:
        """Bitset of R."""
        return mask_of(self.remainder)

    def validate(self, graph: Graph) -> None:
        """
        Check every packing invariant against the host graph.

        Raises:
            InvalidPackingError: With reason ``short-cycle``, ``bad-vertex``,
                ``missing-edge``, ``overlap`` or ``bad-remainder``
        """
        seen: set[int] = set()
        for cycle in self.cycles:
            if len(cycle) < 3:
                raise InvalidPackingError(f"Cycle {cycle} has fewer than 3 vertices", "short-cycle")
            if len(set(cycle)) != len(cycle):
                raise InvalidPackingError(f"Cycle {cycle} repeats a vertex", "overlap")
            for v in cycle:
                if not 0 <= v < graph.n:
                    raise InvalidPackingError(f"Vertex {v} out of range", "bad-vertex")
            for i, u in enumerate(cycle):
                w = cycle[(i + 1) % len(cycle)]
                if not graph.has_edge(u, w):
                    raise InvalidPackingError(f"Cycle {cycle} uses non-edge {u}{w}", "missing-edge")
            if seen & set(cycle):
                raise InvalidPackingError(f"Cycle {cycle} overlaps another cycle", "overlap")
            seen |= set(cycle)
        if self.remainder != frozenset(range(graph.n)) - seen:
            raise InvalidPackingError(
                "Remainder is not the complement of the cycles", "bad-remainder"
            )

    def replace(self, graph: Graph, removed: list[int], added: list[Cycle]) -> "CyclePacking":
        """New packing with the cycles at the given indices swapped for new ones."""
        kept = [c for i, c in enumerate(self.cycles) if i not in set(removed)]
        return CyclePacking.from_cycles(graph, kept + list(added))

    def format_lines(self) -> list[str]:
        """One line per cycle, vertices separated by spaces."""
        return [" ".join(str(v) for v in cycle) for cycle in self.cycles]


@dataclass(frozen=True)
class OptimalityKey:
    """
    Quality of a packing under the (O1)-(O4) order.

    More cycles first, then smaller total length, then a longer longest path
    in R, then more edges in R.

    Attributes:
        o1: Number of cycles (maximised)
        o2: Total cycle length (minimised)
        o3: Vertices on a longest path of G[R] (maximised)
        o4: Edges of G[R] (maximised)
        o3_exact: False when o3 is a budget-limited lower bound
    """

    o1: int
    o2: int
    o3: int
    o4: int
    o3_exact: bool = field(default=True, compare=False)

    def rank(self) -> tuple[int, int, int, int]:
        """Tuple whose natural order is the optimality order."""
        return (self.o1, -self.o2, self.o3, self.o4)

    def beats(self, other: "OptimalityKey") -> bool:
        """True iff this key is strictly better than other."""
        return self.rank() > other.rank()

    def as_tuple(self) -> tuple[int, int, int, int]:
        """(o1, o2, o3, o4)."""
        return (self.o1, self.o2, self.o3, self.o4)


@dataclass(frozen=True)
class HypothesisReport:
    """
    Numeric hypotheses of the disjoint-cycle theorems for a pair (G, k).

    Flags are None when they depend on an α value the search could not settle.

    Attributes:
        n: |G|
        k: Requested cycle count
        delta: Minimum degree
        sigma2: Minimum Ore-degree (inf for complete graphs)
        alpha: Independence number, or a lower bound if alpha_exact is False
        alpha_exact: Whether alpha is exact
        alpha_witness: Independent set of size alpha
        h1: n >= 3k + 1
        h2: sigma2 >= 4k - 3
        h3: alpha <= n - 2k
        e2: sigma2 >= 4k - 1
        ch_i: n >= 3k
        ch_ii: delta >= 2k
        dirac_ii: delta >= 2k - 1
        h4: Not (k odd, n = 3k, G = 2K_k join complement of K_k) and not (k = 2, G a wheel)
    """

    n: int
    k: int
    delta: int
    sigma2: float
    alpha: int | None
    alpha_exact: bool
    alpha_witness: frozenset[int] | None
    h1: bool
    h2: bool
    h3: bool | None
    e2: bool
    ch_i: bool
    ch_ii: bool
    dirac_ii: bool
    h4: bool

    @property
    def satisfies_main_hypotheses(self) -> bool:
        """(H1), (H2) and (H3) all hold."""
        return self.h1 and self.h2 and self.h3 is True

    def summary(self) -> str:
        """Compact one-line rendering."""
        alpha = "?" if self.alpha is None else f"{self.alpha}{'' if self.alpha_exact else '+'}"
        flags = ",".join(
            f"{name}={'?' if value is None else int(value)}"
            for name, value in (
                ("h1", self.h1),
                ("h2", self.h2),
                ("h3", self.h3),
                ("e2", self.e2),
                ("ch_i", self.ch_i),
                ("ch_ii", self.ch_ii),
                ("dirac_ii", self.dirac_ii),
                ("h4", self.h4),
            )
        )
        return (
            f"n={self.n} k={self.k} delta={self.delta} sigma2={_fmt(self.sigma2)} "
            f"alpha={alpha} {flags}"
        )


def _fmt(value: float) -> str:
    if value in (float("inf"), float("-inf")):
        return "inf" if value > 0 else "-inf"
    return str(int(value))


@dataclass(frozen=True)
class PackerDiagnostics:
    """
    Run statistics attached to packer results.

    Attributes:
        iterations: Improvement steps applied
        helper_edges: Helper edges added by the bootstrap
        moves: Count of applied moves per move name
        skipped_moves: Moves abandoned on a budget, with context
        cap_exhausted: The c·n⁴ improvement cap was reached
        oracle_used: The exact oracle was consulted
        key: Optimality key of the final packing
    """

    iterations: int = 0
    helper_edges: int = 0
    moves: dict[str, int] = field(default_factory=dict)
    skipped_moves: tuple[str, ...] = ()
    cap_exhausted: bool = False
    oracle_used: bool = False
    key: OptimalityKey | None = None


@dataclass(frozen=True)
class PackerResult:
    """Base class of the packer result variants."""

    @property
    def kind(self) -> ResultKind:
        raise NotImplementedError


@dataclass(frozen=True)
class Packing(PackerResult):
    """k disjoint cycles of the input graph."""

    packing: CyclePacking
    diagnostics: PackerDiagnostics = field(default_factory=PackerDiagnostics, compare=False)

    @property
    def kind(self) -> ResultKind:
        return ResultKind.PACKING


@dataclass(frozen=True)
class IndependentSetCertificate(PackerResult):
    """An independent set of size at least n - 2k + 1."""

    vertices: frozenset[int]
    diagnostics: PackerDiagnostics = field(default_factory=PackerDiagnostics, compare=False)

    @property
    def kind(self) -> ResultKind:
        return ResultKind.INDEPENDENT_SET


@dataclass(frozen=True)
class ExceptionalGraph(PackerResult):
    """The input is one of the exceptional graphs."""

    exception: ExceptionKind
    diagnostics: PackerDiagnostics = field(default_factory=PackerDiagnostics, compare=False)

    @property
    def kind(self) -> ResultKind:
        return ResultKind.EXCEPTIONAL


@dataclass(frozen=True)
class HypothesisViolation(PackerResult):
    """
    The input fails a hypothesis the construction needs.

    Attributes:
        report: Hypothesis report for (G, k)
        violated: Names of the failing conditions, drawn from
            ``n<3k``, ``h1``, ``h2`` and ``k<3``
    """

    report: HypothesisReport
    violated: tuple[str, ...]
    diagnostics: PackerDiagnostics = field(default_factory=PackerDiagnostics, compare=False)

    @property
    def kind(self) -> ResultKind:
        return ResultKind.HYPOTHESIS_VIOLATION


@dataclass(frozen=True)
class CandidateCounterexample(PackerResult):
    """The search stalled below k cycles with no certificate available."""

    packing: CyclePacking
    diagnostics: PackerDiagnostics = field(default_factory=PackerDiagnostics, compare=False)

    @property
    def kind(self) -> ResultKind:
        return ResultKind.CANDIDATE_COUNTEREXAMPLE


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of re-checking a packer result; falsy when invalid."""

    valid: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class RuleApplication:
    """
    One step of a decision trail.

    Attributes:
        rule: Rule name such as ``T1``, ``T9``, ``alpha`` or ``oracle``
        detail: The inequality or isomorphism that was checked
        applied: Whether this rule produced the verdict
    """

    rule: str
    detail: str
    applied: bool = False

    def __str__(self) -> str:
        return self.detail if not self.applied else f"{self.rule}: {self.detail}"


@dataclass(frozen=True)
class Decision:
    """
    Verdict plus the rules that led to it.

    Attributes:
        verdict: HasKCycles, NoKCycles or Unknown
        trail: Rules considered, in order
        witness: k disjoint cycles when they were constructed
    """

    verdict: Verdict
    trail: tuple[RuleApplication, ...]
    witness: CyclePacking | None = None

    def __post_init__(self) -> None:
        """A definite verdict must carry a justification."""
        if self.verdict is not Verdict.UNKNOWN and not self.trail:
            raise ValueError(f"Decision {self.verdict.value} needs a non-empty justification")

    @property
    def justification(self) -> str:
        """Trail joined as ``step; step; ...``."""
        return "; ".join(str(step) for step in self.trail)

    @property
    def deciding_rule(self) -> str | None:
        """Name of the rule that produced the verdict."""
        for step in reversed(self.trail):
            if step.applied:
                return step.rule
        return None
