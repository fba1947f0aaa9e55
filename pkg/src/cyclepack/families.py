"""Constructors for the named graph families used as sharpness examples and test inputs."""

from dataclasses import dataclass
from enum import Enum

from cyclepack.exceptions import InvalidParameterError
from cyclepack.graph import Graph, blowup, disjoint_union, join


class FamilyKind(str, Enum):
    """Named graph families.

    Parameters used by each kind:
        - Y1, Y2, C5_BLOWUP_K3BAR, PETERSEN: none
        - GK, HSHARP, TWO_KK_JOIN_KKBAR, KKK_PLUS_KK, C5_BLOWUP_EXTENDED: k
        - GK_EXTENDED: r, t
        - WHEEL, COMPLETE, CYCLE, EMPTY: n
        - COMPLETE_BIPARTITE: s, t
    """

    Y1 = "Y1"
    Y2 = "Y2"
    GK = "Gk"
    GK_EXTENDED = "GkExtended"
    C5_BLOWUP_K3BAR = "C5BlowupK3bar"
    C5_BLOWUP_EXTENDED = "C5BlowupExtended"
    HSHARP = "Hsharp"
    TWO_KK_JOIN_KKBAR = "TwoKkJoinKkBar"
    WHEEL = "Wheel"
    COMPLETE = "CompleteK"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    CYCLE = "Cycle"
    KKK_PLUS_KK = "KkkPlusKk"
    EMPTY = "Empty"
    PETERSEN = "Petersen"


_NEEDS_K = {
    FamilyKind.GK: 3,
    FamilyKind.HSHARP: 1,
    FamilyKind.TWO_KK_JOIN_KKBAR: 1,
    FamilyKind.KKK_PLUS_KK: 1,
    FamilyKind.C5_BLOWUP_EXTENDED: 4,
}
_NEEDS_N = {
    FamilyKind.WHEEL: 4,
    FamilyKind.COMPLETE: 1,
    FamilyKind.CYCLE: 3,
    FamilyKind.EMPTY: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """
    A family kind with its parameters.

    Attributes:
        kind: Which family
        n: Vertex count (Wheel, CompleteK, Cycle, Empty)
        k: Cycle-count parameter (Gk, Hsharp, TwoKkJoinKkBar, KkkPlusKk, C5BlowupExtended)
        r: First summand of k = r + t (GkExtended)
        t: Second summand (GkExtended) or second class size (CompleteBipartite)
        s: First class size (CompleteBipartite)
    """

    kind: FamilyKind
    n: int | None = None
    k: int | None = None
    r: int | None = None
    t: int | None = None
    s: int | None = None

    def __post_init__(self) -> None:
        """Validate that each family's parameters are present and in range."""
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in _NEEDS_K:
            low = _NEEDS_K[kind]
            if self.k is None or self.k < low:
                raise InvalidParameterError(f"{kind.value} requires k >= {low}, got {self.k}")
            if kind is FamilyKind.C5_BLOWUP_EXTENDED and self.k > 6:
                raise InvalidParameterError(f"{kind.value} is defined for k <= 6, got {self.k}")
        if kind in _NEEDS_N:
            low = _NEEDS_N[kind]
            if self.n is None or self.n < low:
                raise InvalidParameterError(f"{kind.value} requires n >= {low}, got {self.n}")
        if kind is FamilyKind.GK_EXTENDED:
            if self.r is None or self.t is None or self.r < 3 or self.t < 0:
                raise InvalidParameterError(
                    f"{kind.value} requires r >= 3 and t >= 0, got r={self.r}, t={self.t}"
                )
            k = self.r + self.t
            if not k + 3 <= 2 * self.r <= 2 * k:
                raise InvalidParameterError(
                    f"{kind.value} requires k + 3 <= 2r <= 2k with k = r + t, "
                    f"got r={self.r}, t={self.t}"
                )
        if kind is FamilyKind.COMPLETE_BIPARTITE and (
            self.s is None or self.t is None or self.s < 1 or self.t < 1
        ):
            raise InvalidParameterError(
                f"{kind.value} requires s, t >= 1, got s={self.s}, t={self.t}"
            )

    def label(self) -> str:
        """Short human-readable name, e.g. ``Wheel(n=6)``."""
        params = [f"{name}={getattr(self, name)}" for name in ("n", "k", "r", "t", "s")]
        shown = [p for p in params if not p.endswith("=None")]
        return f"{self.kind.value}({', '.join(shown)})" if shown else self.kind.value


def complete_graph(n: int) -> Graph:
    """K_n."""
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    """K̄_n."""
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    """C_n on 0..n-1 in order."""
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with classes 0..s-1 and s..s+t-1."""
    return join(empty_graph(s), empty_graph(t))


def wheel_graph(n: int) -> Graph:
    """Wheel on n vertices: hub 0 joined to the rim cycle 1..n-1."""
    if n < 4:
        raise InvalidParameterError(f"wheels need n >= 4, got {n}")
    return join(Graph(1), cycle_graph(n - 1))


def petersen_graph() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def y1_graph() -> Graph:
    """
    Y₁: K₈ on 0..7 with the edge w z = 0 7 replaced by the path 0-8-9-7.

    |Y₁| = 10, σ₂(Y₁) = 9, α(Y₁) = 2, and Y₁ has no three disjoint cycles.
    """
    edges = [(u, v) for u in range(8) for v in range(u + 1, 8) if (u, v) != (0, 7)]
    edges += [(0, 8), (8, 9), (9, 7)]
    return Graph(10, edges)


def y2_graph() -> Graph:
    """
    Y₂ = K₁ ∨ Q, where Q is K_{4,4} with one vertex split into an edge u u'.

    Vertex 0 is the K₁. In Q the split vertex is the first vertex of the
    first class: u = 1 keeps its edges to b0, b1 and u' = 2 to b2, b3; the
    rest of the first class is 3..5 and the second class b0..b3 is 6..9.
    """
    u, u_prime = 1, 2
    first_class = [3, 4, 5]
    second_class = [6, 7, 8, 9]
    edges = [(u, u_prime)]
    edges += [(u, b) for b in second_class[:2]] + [(u_prime, b) for b in second_class[2:]]
    edges += [(a, b) for a in first_class for b in second_class]
    edges += [(0, v) for v in range(1, 10)]
    return Graph(10, edges)


def gk_graph(k: int) -> Graph:
    """G_k = K̄_{2k−2} ∨ (K̄_{2k−3} + K₃); δ = 2k−2 and α = |G_k| − 2k."""
    return join(empty_graph(2 * k - 2), disjoint_union(empty_graph(2 * k - 3), complete_graph(3)))


def named_family(spec: FamilySpec) -> Graph:
    """
    Construct a graph of a named family.

    Args:
        spec: Validated family specification

    Returns:
        Graph matching the construction

    Example:
        >>> named_family(FamilySpec(FamilyKind.GK, k=3)).n
        10
    """
    kind = spec.kind
    if kind is FamilyKind.Y1:
        return y1_graph()
    if kind is FamilyKind.Y2:
        return y2_graph()
    if kind is FamilyKind.GK:
        return gk_graph(spec.k)  # type: ignore[arg-type]
    if kind is FamilyKind.GK_EXTENDED:
        r, t = spec.r, spec.t
        return join(gk_graph(r), complete_graph(2 * t))  # type: ignore[arg-type, operator]
    if kind is FamilyKind.C5_BLOWUP_K3BAR:
        return blowup(cycle_graph(5), empty_graph(3))
    if kind is FamilyKind.C5_BLOWUP_EXTENDED:
        base = blowup(cycle_graph(5), empty_graph(3))
        extra = 2 * spec.k - 8  # type: ignore[operator]
        return join(base, empty_graph(extra)) if extra else base
    if kind is FamilyKind.HSHARP:
        k = spec.k
        return join(empty_graph(k + 1), complete_graph(2 * k - 1))  # type: ignore[operator]
    if kind is FamilyKind.TWO_KK_JOIN_KKBAR:
        k = spec.k
        twin = disjoint_union(complete_graph(k), complete_graph(k))  # type: ignore[arg-type]
        return join(twin, empty_graph(k))  # type: ignore[arg-type]
    if kind is FamilyKind.WHEEL:
        return wheel_graph(spec.n)  # type: ignore[arg-type]
    if kind is FamilyKind.COMPLETE:
        return complete_graph(spec.n)  # type: ignore[arg-type]
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return complete_bipartite(spec.s, spec.t)  # type: ignore[arg-type]
    if kind is FamilyKind.CYCLE:
        return cycle_graph(spec.n)  # type: ignore[arg-type]
    if kind is FamilyKind.KKK_PLUS_KK:
        k = spec.k
        return disjoint_union(complete_bipartite(k, k), complete_graph(k))  # type: ignore[arg-type]
    if kind is FamilyKind.EMPTY:
        return empty_graph(spec.n)  # type: ignore[arg-type]
    return petersen_graph()
