"""Graph and Multigraph types plus the basic graph algebra.

Vertices are dense integer indices 0..n-1. Vertex sets are Python ints used
as bitsets (bit v set iff vertex v is in the set), so set algebra is a
handful of machine words at desk scale.
"""

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from cyclepack.exceptions import InvalidGraphError, InvalidParameterError

if TYPE_CHECKING:
    import networkx as nx

INFINITY = math.inf
NEG_INFINITY = -math.inf


def mask_of(vertices: Iterable[int]) -> int:
    """Return the bitset holding the given vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertices of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit (mask must be non-zero)."""
    return (mask & -mask).bit_length() - 1


class Graph:
    """
    Immutable simple undirected graph.

    Attributes:
        n: Vertex count (|G|)
        adjacency: Per-vertex neighbour bitsets
        degrees: Per-vertex degree cache
        edge_count: Number of edges (‖G‖)
    """

    __slots__ = ("n", "adjacency", "degrees", "edge_count", "_canonical")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        """
        Build a graph from an edge list.

        Args:
            n: Number of vertices
            edges: Pairs (u, v) with 0 <= u, v < n; duplicates are merged

        Raises:
            InvalidGraphError: On a self loop or an out-of-range endpoint
            InvalidParameterError: If n is negative
        """
        if n < 0:
            raise InvalidParameterError(f"n must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"Edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"Self loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init_from_masks(n, tuple(adj))

    def _init_from_masks(self, n: int, adjacency: tuple[int, ...]) -> None:
        self.n = n
        self.adjacency = adjacency
        self.degrees = tuple(a.bit_count() for a in adjacency)
        self.edge_count = sum(self.degrees) // 2
        self._canonical: tuple[int, tuple[int, ...]] | None = None

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[int]) -> "Graph":
        """
        Build a graph directly from neighbour bitsets.

        Args:
            adjacency: Bitset per vertex; must be symmetric and loop-free

        Returns:
            Graph instance

        Raises:
            InvalidGraphError: If the bitsets are asymmetric, looped or out of range
        """
        masks = tuple(adjacency)
        n = len(masks)
        full = (1 << n) - 1
        for v, a in enumerate(masks):
            if a & ~full or a < 0:
                raise InvalidGraphError(f"Neighbour set of {v} out of range for n={n}")
            if a >> v & 1:
                raise InvalidGraphError(f"Self loop at vertex {v}")
            for u in iter_bits(a):
                if not masks[u] >> v & 1:
                    raise InvalidGraphError(f"Asymmetric adjacency between {v} and {u}")
        graph = cls.__new__(cls)
        graph._init_from_masks(n, masks)
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: "nx.Graph") -> "Graph":
        """Convert a networkx graph, numbering nodes in sorted order when possible."""
        try:
            nodes = sorted(nx_graph.nodes)
        except TypeError:
            nodes = list(nx_graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges if u != v))

    def to_networkx(self) -> "nx.Graph":
        """Convert to a networkx Graph on nodes 0..n-1."""
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def full_mask(self) -> int:
        """Bitset of all vertices."""
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        """Neighbour bitset of v."""
        return self.adjacency[v]

    def neighbor_list(self, v: int) -> list[int]:
        """Neighbours of v in increasing order."""
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        """Degree of v."""
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        """True iff uv is an edge."""
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        result = []
        for u in range(self.n):
            for v in iter_bits(self.adjacency[u] >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def check_vertices(self, vertices: Iterable[int]) -> None:
        """Raise InvalidGraphError if any vertex index is out of range."""
        for v in vertices:
            if not 0 <= v < self.n:
                raise InvalidGraphError(f"Vertex {v} out of range for n={self.n}")

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """True iff the given vertices are pairwise non-adjacent."""
        members = list(vertices)
        self.check_vertices(members)
        mask = mask_of(members)
        return all(not self.adjacency[v] & mask for v in members)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy with the given edges added."""
        adj = list(self.adjacency)
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(f"Self loop at vertex {u}")
            self.check_vertices((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_adjacency(adj)

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy with the given edges removed (missing edges are ignored)."""
        adj = list(self.adjacency)
        for u, v in edges:
            self.check_vertices((u, v))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj)

    def induced_edge_count(self, mask: int) -> int:
        """Number of edges of the subgraph induced by a vertex bitset."""
        return sum((self.adjacency[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def relabel(self, permutation: list[int]) -> "Graph":
        """Return the graph with vertex v renamed permutation[v]."""
        if sorted(permutation) != list(range(self.n)):
            raise InvalidParameterError("permutation must be a bijection on 0..n-1")
        return Graph(self.n, ((permutation[u], permutation[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        """Graphs are equal when they have the same labelled adjacency."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __getstate__(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.adjacency)

    def __setstate__(self, state: tuple[int, tuple[int, ...]]) -> None:
        self._init_from_masks(*state)


@dataclass(frozen=True)
class DegreeStats:
    """
    Degree statistics of a graph.

    Attributes:
        delta: Minimum degree δ
        Delta: Maximum degree Δ
        sigma2: Minimum Ore-degree over non-adjacent pairs (INFINITY if complete)
        theta: Maximum Ore-degree over adjacent pairs (NEG_INFINITY if edgeless)
    """

    delta: int
    Delta: int  # noqa: N815
    sigma2: float
    theta: float

    def __post_init__(self) -> None:
        if self.delta > self.Delta:
            raise InvalidParameterError(f"delta {self.delta} exceeds Delta {self.Delta}")


@dataclass(frozen=True)
class VertexClasses:
    """Buds (degree ≤ 1), high (degree ≥ 2k−1) and low vertices for a given k."""

    k: int
    buds: frozenset[int]
    high: frozenset[int]
    low: frozenset[int]


def degree_stats(graph: Graph) -> DegreeStats:
    """
    Compute δ, Δ, σ₂ and θ.

    Args:
        graph: Graph with at least one vertex

    Returns:
        DegreeStats with the declared sentinels

    Raises:
        InvalidParameterError: If the graph has no vertices
    """
    if graph.n < 1:
        raise InvalidParameterError("degree_stats needs at least one vertex")
    deg = graph.degrees
    sigma2: float = INFINITY
    theta: float = NEG_INFINITY
    full = graph.full_mask
    for x in range(graph.n):
        later = full & ~((2 << x) - 1)
        for y in iter_bits(later & ~graph.adjacency[x]):
            sigma2 = min(sigma2, deg[x] + deg[y])
        for y in iter_bits(later & graph.adjacency[x]):
            theta = max(theta, deg[x] + deg[y])
    return DegreeStats(delta=min(deg), Delta=max(deg), sigma2=sigma2, theta=theta)


def vertex_classes(graph: Graph, k: int) -> VertexClasses:
    """Split vertices into buds, high and low vertices relative to k."""
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    buds = frozenset(v for v in range(graph.n) if graph.degrees[v] <= 1)
    high = frozenset(v for v in range(graph.n) if graph.degrees[v] >= 2 * k - 1)
    low = frozenset(range(graph.n)) - high
    return VertexClasses(k=k, buds=buds, high=high, low=low)


def edges_between(graph: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """
    ‖A,B‖: the number of pairs (u, v) with u ∈ A, v ∈ B and uv an edge.

    A and B need not be disjoint, so edges_between(V, V) = 2‖G‖.

    Raises:
        InvalidGraphError: If a vertex index is out of range
    """
    a_set = set(a)
    b_list = list(b)
    graph.check_vertices(a_set)
    graph.check_vertices(b_list)
    b_mask = mask_of(b_list)
    return sum((graph.adjacency[u] & b_mask).bit_count() for u in a_set)


def complement(graph: Graph) -> Graph:
    """Complement Ḡ."""
    full = graph.full_mask
    return Graph.from_adjacency(full & ~a & ~(1 << v) for v, a in enumerate(graph.adjacency))


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """G + H, with H's vertices shifted by |G|."""
    shift = first.n
    return Graph.from_adjacency(first.adjacency + tuple(a << shift for a in second.adjacency))


def join(first: Graph, second: Graph) -> Graph:
    """G ∨ H: the disjoint union plus every edge between the two parts."""
    shift = first.n
    first_all = first.full_mask
    second_all = second.full_mask << shift
    adjacency = tuple(a | second_all for a in first.adjacency) + tuple(
        (a << shift) | first_all for a in second.adjacency
    )
    return Graph.from_adjacency(adjacency)


def blowup(graph: Graph, inner: Graph) -> Graph:
    """
    Blow-up G[H]: vertex (x, y) has index x·|H| + y.

    (x, y)(x', y') is an edge iff xx' ∈ E(G), or x = x' and yy' ∈ E(H).
    """
    h = inner.n
    block = inner.full_mask
    adjacency = []
    for x in range(graph.n):
        outer = 0
        for x2 in iter_bits(graph.adjacency[x]):
            outer |= block << (x2 * h)
        for y in range(h):
            adjacency.append(outer | (inner.adjacency[y] << (x * h)))
    return Graph.from_adjacency(adjacency)


@dataclass(frozen=True)
class Multigraph:
    """
    Multigraph with edge multiplicities and loops.

    Vertex labels are kept from the graph the multigraph was built from, so a
    reduced multigraph may have gaps in its vertex set.

    Attributes:
        vertices: The vertex labels present
        edges: Multiplicity per unordered pair (u, v) with u < v
        loops: Loop count per vertex
    """

    vertices: frozenset[int]
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)
    loops: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate multiplicities and endpoints."""
        for (u, v), mult in self.edges.items():
            if not u < v:
                raise InvalidGraphError(f"Multigraph pair ({u}, {v}) must be ordered u < v")
            if u not in self.vertices or v not in self.vertices:
                raise InvalidGraphError(f"Multigraph edge ({u}, {v}) uses an unknown vertex")
            if mult < 1:
                raise InvalidGraphError(f"Multiplicity of ({u}, {v}) must be >= 1, got {mult}")
        for v, count in self.loops.items():
            if v not in self.vertices or count < 1:
                raise InvalidGraphError(f"Invalid loop entry {v}: {count}")

    @classmethod
    def from_graph(cls, graph: Graph) -> "Multigraph":
        """Simple graph viewed as a multigraph with all multiplicities 1."""
        return cls(frozenset(range(graph.n)), {e: 1 for e in graph.edges()}, {})

    @property
    def n(self) -> int:
        """Vertex count."""
        return len(self.vertices)

    def multiplicity(self, u: int, v: int) -> int:
        """Number of parallel uv edges (loops when u == v)."""
        if u == v:
            return self.loops.get(u, 0)
        return self.edges.get((min(u, v), max(u, v)), 0)

    def neighbors(self, v: int) -> dict[int, int]:
        """Distinct neighbours of v (loops excluded) with multiplicities."""
        result = {}
        for (a, b), mult in self.edges.items():
            if a == v:
                result[b] = mult
            elif b == v:
                result[a] = mult
        return result

    def degree(self, v: int) -> int:
        """Degree of v; a loop contributes 2."""
        return sum(self.neighbors(v).values()) + 2 * self.loops.get(v, 0)

    def is_simple(self) -> bool:
        """True iff there are no loops and no parallel edges."""
        return not self.loops and all(m == 1 for m in self.edges.values())
