"""Graphs without two disjoint cycles.

A graph is reduced to a multigraph of minimum degree at least 3 by deleting
buds and suppressing degree-2 vertices; neither operation changes the
maximum number of disjoint cycles. The reduced multigraph is then matched
against the four structural types of multigraphs without two disjoint
cycles, and the match is mapped back to a named family of simple graphs.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from cyclepack.graph import Graph, Multigraph, degree_stats

logger = logging.getLogger(__name__)


class ReductionOp(str, Enum):
    """Operations recorded in a reduction trace."""

    DELETE_BUD = "delete-bud"
    SUPPRESS = "suppress"


@dataclass(frozen=True)
class ReductionStep:
    """
    One reduction operation.

    Attributes:
        op: Which operation
        vertex: The removed vertex
        neighbors: Former neighbours of the vertex; for a suppression that
            created a loop this is a single vertex
    """

    op: ReductionOp
    vertex: int
    neighbors: tuple[int, ...]


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered reduction operations; removed vertices are Q' = V(G) ∖ V(H)."""

    steps: tuple[ReductionStep, ...] = ()

    @property
    def removed(self) -> frozenset[int]:
        """Vertices removed by the reduction."""
        return frozenset(step.vertex for step in self.steps)

    @property
    def suppressions(self) -> int:
        """Number of suppressed degree-2 vertices."""
        return sum(1 for step in self.steps if step.op is ReductionOp.SUPPRESS)

    def describe(self) -> list[str]:
        """Human-readable lines such as ``suppress 8 -> 0-9``."""
        lines = []
        for step in self.steps:
            target = "-".join(str(v) for v in step.neighbors) or "nothing"
            lines.append(f"{step.op.value} {step.vertex} -> {target}")
        return lines


class _MutableMultigraph:
    def __init__(self, multigraph: Multigraph):
        self.vertices = set(multigraph.vertices)
        self.adjacency: dict[int, dict[int, int]] = {v: {} for v in self.vertices}
        for (u, v), mult in multigraph.edges.items():
            self.adjacency[u][v] = mult
            self.adjacency[v][u] = mult
        self.loops = dict(multigraph.loops)

    def degree(self, v: int) -> int:
        return sum(self.adjacency[v].values()) + 2 * self.loops.get(v, 0)

    def remove(self, v: int) -> None:
        for u in self.adjacency.pop(v):
            del self.adjacency[u][v]
        self.loops.pop(v, None)
        self.vertices.discard(v)

    def freeze(self) -> Multigraph:
        edges = {
            (u, v): mult for u in self.adjacency for v, mult in self.adjacency[u].items() if u < v
        }
        return Multigraph(frozenset(self.vertices), edges, dict(self.loops))


def reduce_multigraph(multigraph: Multigraph) -> tuple[Multigraph, ReductionTrace]:
    """
    Delete buds and suppress degree-2 vertices until neither applies.

    Buds (degree ≤ 1) are deleted first, lowest label first; otherwise the
    lowest degree-2 vertex with a non-loop edge is suppressed. A vertex whose
    only edges are parallel to one neighbour x becomes a loop at x. A vertex
    carrying only a single loop is itself a cycle and is left in place.
    Multiplicities are kept exact.

    Args:
        multigraph: Input multigraph (use Multigraph.from_graph for simple graphs)

    Returns:
        (reduced multigraph, trace of the applied operations)

    Example:
        >>> reduced, _ = reduce_multigraph(Multigraph.from_graph(cycle_graph(7)))
        >>> dict(reduced.loops)
        {6: 1}
    """
    work = _MutableMultigraph(multigraph)
    steps: list[ReductionStep] = []
    while True:
        ordered = sorted(work.vertices)
        bud = next((v for v in ordered if work.degree(v) <= 1), None)
        if bud is not None:
            neighbours = tuple(sorted(work.adjacency[bud]))
            work.remove(bud)
            steps.append(ReductionStep(ReductionOp.DELETE_BUD, bud, neighbours))
            continue

        vertex = next(
            (v for v in ordered if work.degree(v) == 2 and work.adjacency[v]),
            None,
        )
        if vertex is None:
            break
        neighbours = tuple(sorted(work.adjacency[vertex]))
        work.remove(vertex)
        if len(neighbours) == 2:
            x, y = neighbours
            work.adjacency[x][y] = work.adjacency[x].get(y, 0) + 1
            work.adjacency[y][x] = work.adjacency[x][y]
        else:
            (x,) = neighbours
            work.loops[x] = work.loops.get(x, 0) + 1
        steps.append(ReductionStep(ReductionOp.SUPPRESS, vertex, neighbours))

    reduced = work.freeze()
    trace = ReductionTrace(tuple(steps))
    logger.debug(f"reduce_multigraph {multigraph.n} -> {reduced.n} vertices, {len(steps)} steps")
    return reduced, trace


class ReducedType(str, Enum):
    """Structural types of multigraphs without two disjoint cycles.

    Types:
        - K5: exactly the simple K₅
        - WheelLike: a wheel whose spokes may be multiple
        - K3t: K_{3,t} plus any loopless multigraph on the 3-class
        - ForestPlusVertex: a forest plus one vertex carrying every loop
    """

    K5 = "K5"
    WHEEL_LIKE = "WheelLike"
    K3T = "K3t"
    FOREST_PLUS_VERTEX = "ForestPlusVertex"


class FamilyLabel(str, Enum):
    """Named families of simple graphs with |G| ≥ 6, σ₂ ≥ 5 and no two disjoint cycles.

    Families:
        - a: K₅ + K₂
        - b: K₅ with a pendant edge, possibly subdivided
        - c: K₅ with one edge subdivided and a leaf on the subdivision vertex
        - d: a simple type K5/WheelLike/K3t graph, possibly with one edge subdivided
        - e: a WheelLike/K3t graph with one doubled edge, one parallel part subdivided
    """

    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


@dataclass(frozen=True)
class LovaszFamily:
    """
    A matched structural type with its witness.

    Attributes:
        kind: Structural type of the reduced multigraph
        label: Family label for simple inputs with |G| ≥ 6 and σ₂ ≥ 5
        reduced: The reduced multigraph
        trace: The reduction that produced it
        hub: Wheel hub (WheelLike)
        three_class: The 3-class (K3t)
        apex: The vertex x whose removal leaves a forest (ForestPlusVertex;
            None when the reduction removed everything)
    """

    kind: ReducedType
    label: FamilyLabel | None
    reduced: Multigraph
    trace: ReductionTrace
    hub: int | None = None
    three_class: frozenset[int] | None = None
    apex: int | None = None


def _simple_neighbours(m: Multigraph) -> dict[int, set[int]]:
    result: dict[int, set[int]] = {v: set() for v in m.vertices}
    for u, v in m.edges:
        result[u].add(v)
        result[v].add(u)
    return result


def _is_simple_cycle(vertices: set[int], m: Multigraph, neighbours: dict[int, set[int]]) -> bool:
    if len(vertices) < 3:
        return False
    for v in vertices:
        inside = neighbours[v] & vertices
        if len(inside) != 2 or any(m.multiplicity(v, u) != 1 for u in inside):
            return False
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in neighbours[v] & vertices:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vertices


def _is_simple_forest(vertices: set[int], m: Multigraph, neighbours: dict[int, set[int]]) -> bool:
    if any(m.loops.get(v, 0) for v in vertices):
        return False
    edges = 0
    for v in vertices:
        for u in neighbours[v] & vertices:
            if m.multiplicity(v, u) != 1:
                return False
            edges += 1
    edges //= 2
    components = 0
    seen: set[int] = set()
    for root in vertices:
        if root in seen:
            continue
        components += 1
        seen.add(root)
        stack = [root]
        while stack:
            v = stack.pop()
            for u in neighbours[v] & vertices:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return edges == len(vertices) - components


def matches_k5(m: Multigraph) -> bool:
    """Exactly the simple K₅."""
    return m.n == 5 and m.is_simple() and len(m.edges) == 10


def matches_wheel(m: Multigraph, hub: int) -> bool:
    """hub is adjacent to every other vertex, which form a simple cycle; no loops."""
    if m.loops or hub not in m.vertices:
        return False
    neighbours = _simple_neighbours(m)
    rim = set(m.vertices) - {hub}
    return neighbours[hub] == rim and _is_simple_cycle(rim, m, neighbours)


def matches_k3t(m: Multigraph, three_class: frozenset[int]) -> bool:
    """Outside vertices are independent and joined to each of the 3-class exactly once; no loops."""
    if m.loops or len(three_class) != 3 or not three_class <= m.vertices:
        return False
    neighbours = _simple_neighbours(m)
    for v in m.vertices - three_class:
        if neighbours[v] != set(three_class):
            return False
        if any(m.multiplicity(v, a) != 1 for a in three_class):
            return False
    return True


def matches_forest_plus_vertex(m: Multigraph, apex: int | None) -> bool:
    """Removing apex leaves a simple forest, and every loop sits at apex."""
    if apex is None:
        return m.n == 0
    if apex not in m.vertices or any(v != apex for v in m.loops):
        return False
    neighbours = _simple_neighbours(m)
    return _is_simple_forest(set(m.vertices) - {apex}, m, neighbours)


def _match(m: Multigraph) -> tuple[ReducedType, dict[str, object]] | None:
    if m.n == 0:
        return ReducedType.FOREST_PLUS_VERTEX, {"apex": None}

    isolated_looped = [v for v in m.loops if not m.neighbors(v)]
    if len(isolated_looped) >= 2:
        return None
    if len(isolated_looped) == 1:
        if m.n == 1:
            return ReducedType.FOREST_PLUS_VERTEX, {"apex": isolated_looped[0]}
        return None

    if matches_k5(m):
        return ReducedType.K5, {}
    for hub in sorted(m.vertices):
        if matches_wheel(m, hub):
            return ReducedType.WHEEL_LIKE, {"hub": hub}
    if not m.loops:
        # Every outside vertex sees exactly the 3-class, so take it from any vertex of degree 3.
        candidates = []
        for v in sorted(m.vertices):
            neighbours = m.neighbors(v)
            if len(neighbours) == 3:
                candidates.append(frozenset(neighbours))
        if m.n == 3:
            candidates.append(frozenset(m.vertices))
        for three_class in dict.fromkeys(candidates):
            if matches_k3t(m, three_class):
                return ReducedType.K3T, {"three_class": three_class}
    for apex in sorted(m.vertices):
        if matches_forest_plus_vertex(m, apex):
            return ReducedType.FOREST_PLUS_VERTEX, {"apex": apex}
    return None


def _family_label(
    graph: Graph, kind: ReducedType, m: Multigraph, trace: ReductionTrace
) -> FamilyLabel | None:
    if graph.n < 6 or degree_stats(graph).sigma2 < 5:
        return None
    if kind is ReducedType.FOREST_PLUS_VERTEX:
        return None
    removed = trace.removed
    kept = m.vertices
    if kind is ReducedType.K5:
        attachments = sum(1 for q in removed for u in graph.neighbor_list(q) if u in kept)
        if attachments == 0:
            return FamilyLabel.A
        if attachments == 1:
            return FamilyLabel.B
        has_leaf = any(graph.degrees[q] == 1 for q in removed)
        return FamilyLabel.C if has_leaf else FamilyLabel.D
    if any(mult == 2 for mult in m.edges.values()):
        return FamilyLabel.E
    return FamilyLabel.D


def classify_no_two_cycles(graph: Graph) -> LovaszFamily | None:
    """
    Match a simple graph against the families without two disjoint cycles.

    Args:
        graph: Simple input graph

    Returns:
        The matched family with its witness, or None if the graph has two
        disjoint cycles

    Example:
        >>> classify_no_two_cycles(disjoint_union(complete_graph(5), complete_graph(2))).label
        <FamilyLabel.A: 'a'>
    """
    reduced, trace = reduce_multigraph(Multigraph.from_graph(graph))
    matched = _match(reduced)
    if matched is None:
        logger.debug(f"classify_no_two_cycles: reduced graph on {reduced.n} vertices has no type")
        return None
    kind, witness = matched
    label = _family_label(graph, kind, reduced, trace)
    family = LovaszFamily(kind, label, reduced, trace, **witness)  # type: ignore[arg-type]
    logger.debug(f"classify_no_two_cycles: {kind.value} label={label.value if label else None}")
    return family


def verify_family_witness(graph: Graph, family: LovaszFamily) -> bool:
    """
    Re-run the reduction and the type test with the recorded witness.

    Returns:
        True iff the reduction reproduces the recorded multigraph and the
        witness satisfies its type's pattern
    """
    reduced, trace = reduce_multigraph(Multigraph.from_graph(graph))
    if reduced != family.reduced or trace != family.trace:
        return False
    if family.kind is ReducedType.K5:
        return matches_k5(reduced)
    if family.kind is ReducedType.WHEEL_LIKE:
        return family.hub is not None and matches_wheel(reduced, family.hub)
    if family.kind is ReducedType.K3T:
        return family.three_class is not None and matches_k3t(reduced, family.three_class)
    return matches_forest_plus_vertex(reduced, family.apex)
