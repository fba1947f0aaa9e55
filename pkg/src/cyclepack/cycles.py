"""Cycle and path search kernels on induced subgraphs.

All functions take a host graph plus a vertex bitset and work inside the
induced subgraph G[mask]. Cycles are returned as vertex tuples in canonical
rotation: the smallest vertex first, then its smaller cycle-neighbour.
"""

import logging
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from cyclepack.exceptions import BudgetExceededError
from cyclepack.graph import Graph, iter_bits, lowest_bit

logger = logging.getLogger(__name__)

Cycle = tuple[int, ...]


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate and orient a cyclic vertex sequence into canonical form."""
    items = list(cycle)
    i = items.index(min(items))
    rotated = items[i:] + items[:i]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def two_core(graph: Graph, mask: int) -> int:
    """Vertices of G[mask] that survive repeated deletion of degree ≤ 1 vertices."""
    adj = graph.adjacency
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            if (adj[v] & mask).bit_count() <= 1:
                mask &= ~(1 << v)
                changed = True
    return mask


def is_forest(graph: Graph, mask: int) -> bool:
    """True iff G[mask] has no cycle."""
    return two_core(graph, mask) == 0


def girth(graph: Graph, mask: int, max_length: int | None = None) -> int | None:
    """
    Length of a shortest cycle in G[mask].

    Args:
        graph: Host graph
        mask: Vertex bitset
        max_length: Ignore cycles longer than this

    Returns:
        The girth, or None if G[mask] has no cycle of length ≤ max_length
    """
    adj = graph.adjacency
    core = two_core(graph, mask)
    best = max_length + 1 if max_length is not None else core.bit_count() + 1
    for root in iter_bits(core):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(adj[u] & core):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    limit = max_length if max_length is not None else core.bit_count()
    return best if best <= limit else None


def _distances_to(graph: Graph, mask: int, source: int) -> dict[int, int]:
    adj = graph.adjacency
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_bits(adj[u] & mask):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def cycles_of_length(graph: Graph, mask: int, length: int) -> Iterator[Cycle]:
    """
    Yield every cycle of exactly the given length in G[mask], lexicographically.

    Each cycle is produced once, in canonical rotation.
    """
    if length < 3:
        return
    core = two_core(graph, mask)
    for start in iter_bits(core):
        yield from _cycles_from(graph, core, start, length)


def _cycles_from(graph: Graph, core: int, start: int, length: int) -> Iterator[Cycle]:
    """Cycles of the given length whose smallest vertex is start."""
    adj = graph.adjacency
    allowed = core & ~((2 << start) - 1)
    dist = _distances_to(graph, allowed | (1 << start), start)
    path = [start]

    def extend(u: int, used: int) -> Iterator[Cycle]:
        depth = len(path)
        if depth == length:
            if adj[u] >> start & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in iter_bits(adj[u] & allowed & ~used):
            # w sits at position depth; it must still reach start in the steps left.
            if dist.get(w, length) > length - depth:
                continue
            path.append(w)
            yield from extend(w, used | (1 << w))
            path.pop()

    yield from extend(start, 1 << start)


def shortest_cycle(graph: Graph, mask: int, max_length: int | None = None) -> Cycle | None:
    """Lexicographically least cycle among the shortest cycles of G[mask]."""
    length = girth(graph, mask, max_length)
    if length is None:
        return None
    return next(cycles_of_length(graph, mask, length), None)


def chordless_cycles_through(
    graph: Graph, mask: int, v: int, max_length: int | None = None
) -> list[Cycle]:
    """
    All chordless cycles of G[mask] through v, shortest first.

    Every maximum cycle packing can be rearranged so that each cycle is
    chordless (shortcutting along a chord only frees vertices), so the exact
    oracle branches over these alone.
    """
    adj = graph.adjacency
    v_adj = adj[v] & mask
    found: list[Cycle] = []

    def extend(path: list[int], blocked: int) -> None:
        last = path[-1]
        for u in iter_bits(adj[last] & mask & ~blocked):
            if v_adj >> u & 1:
                if len(path) >= 2 and path[1] < u:
                    found.append(canonical_cycle(path + [u]))
                continue
            if max_length is not None and len(path) + 2 > max_length:
                continue
            extend(path + [u], blocked | adj[last] | (1 << last) | (1 << u))

    for first in iter_bits(v_adj):
        extend([v, first], (1 << v) | (1 << first))
    found.sort(key=lambda c: (len(c), c))
    return found


@dataclass(frozen=True)
class LongestPath:
    """
    Longest path measurement in an induced subgraph.

    Attributes:
        vertices: Number of vertices on the path (0 for an empty subgraph)
        path: The path found
        exact: False when the search budget ran out and vertices is a lower bound
    """

    vertices: int
    path: tuple[int, ...]
    exact: bool


def _bfs_far(graph: Graph, mask: int, root: int) -> tuple[int, dict[int, int]]:
    adj = graph.adjacency
    parent = {root: -1}
    queue = deque([root])
    last = root
    while queue:
        last = queue.popleft()
        for w in iter_bits(adj[last] & mask):
            if w not in parent:
                parent[w] = last
                queue.append(w)
    return last, parent


def _forest_longest_path(graph: Graph, mask: int) -> tuple[int, ...]:
    best: tuple[int, ...] = ()
    remaining = mask
    while remaining:
        root = lowest_bit(remaining)
        a, first = _bfs_far(graph, mask, root)
        component = sum(1 << w for w in first)
        remaining &= ~component
        b, parent = _bfs_far(graph, component, a)
        path = [b]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        if len(path) > len(best):
            best = tuple(path)
    return best


def longest_path(graph: Graph, mask: int, node_limit: int) -> LongestPath:
    """
    Number of vertices on a longest path of G[mask].

    Forests are solved exactly by the double-BFS diameter method; otherwise a
    depth-first search with a reachability bound runs until node_limit nodes.
    """
    if not mask:
        return LongestPath(0, (), True)
    if is_forest(graph, mask):
        path = _forest_longest_path(graph, mask)
        return LongestPath(len(path), path, True)

    adj = graph.adjacency
    total = mask.bit_count()
    best: list[int] = [lowest_bit(mask)]
    nodes = 0

    def reachable(start: int, free: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u] & free
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen.bit_count() - 1

    def extend(path: list[int], used: int) -> bool:
        nonlocal nodes, best
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceededError("longest_path_nodes", node_limit, tuple(best))
        if len(path) > len(best):
            best = list(path)
            if len(best) == total:
                return True
        last = path[-1]
        free = mask & ~used
        if len(path) + reachable(last, free) <= len(best):
            return False
        for w in iter_bits(adj[last] & free):
            path.append(w)
            if extend(path, used | (1 << w)):
                return True
            path.pop()
        return False

    try:
        for start in iter_bits(mask):
            if extend([start], 1 << start):
                break
    except BudgetExceededError:
        logger.warning(f"longest_path budget hit; using lower bound {len(best)}")
        return LongestPath(len(best), tuple(best), False)
    return LongestPath(len(best), tuple(best), True)
