"""Graph streams: isomorph-free enumeration of small graphs and seeded random graphs."""

import logging
import random
from collections.abc import Callable, Iterator

import networkx as nx

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import EnumerationLimitError, InvalidParameterError
from cyclepack.graph import Graph, complement
from cyclepack.isomorphism import canonical_form

logger = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 8
MAX_BOUNDED_ENUMERATION_VERTICES = 10
DEFAULT_SEED = 20240229

GraphPredicate = Callable[[Graph], bool]


def _classes_with_max_degree(n: int, max_degree: int, budgets: SearchBudgets) -> list[Graph]:
    """One canonical representative per isomorphism class with Δ ≤ max_degree."""
    level: dict[tuple[int, ...], Graph] = {(): Graph(0)}
    for m in range(n):
        nxt: dict[tuple[int, ...], Graph] = {}
        for base in level.values():
            room = [v for v in range(m) if base.degrees[v] < max_degree]
            for subset in range(1 << len(room)):
                if subset.bit_count() > max_degree:
                    continue
                neighbours = 0
                for i, v in enumerate(room):
                    if subset >> i & 1:
                        neighbours |= 1 << v
                adjacency = [
                    a | (1 << m) if neighbours >> v & 1 else a
                    for v, a in enumerate(base.adjacency)
                ]
                adjacency.append(neighbours)
                candidate = Graph.from_adjacency(adjacency)
                _, key = canonical_form(candidate, budgets)
                if key not in nxt:
                    nxt[key] = Graph.from_adjacency(key)
        level = nxt
        logger.debug(
            f"enumeration: {len(level)} classes on {m + 1} vertices (max degree {max_degree})"
        )
    return [level[key] for key in sorted(level, key=lambda k: (sum(a.bit_count() for a in k), k))]


def enumerate_graphs(
    n: int,
    predicate: GraphPredicate | None = None,
    min_degree: int | None = None,
    max_degree: int | None = None,
    budgets: SearchBudgets | None = None,
) -> Iterator[Graph]:
    """
    Yield every isomorphism class on n vertices passing the filters, once each.

    Graphs are built vertex by vertex and deduplicated by canonical form.
    A maximum-degree bound is pruned during construction; a minimum-degree
    bound is realised by enumerating complements under the matching maximum
    degree. Output order is deterministic (by edge count, then canonical form).

    Args:
        n: Number of vertices (at most 8, or 10 with a degree bound)
        predicate: Extra filter applied to each class representative
        min_degree: Keep graphs with δ ≥ min_degree
        max_degree: Keep graphs with Δ ≤ max_degree
        budgets: Budgets for the canonical-form searches

    Raises:
        EnumerationLimitError: If n is too large for internal enumeration
        InvalidParameterError: If n is negative

    Example:
        >>> sum(1 for _ in enumerate_graphs(4))
        11
    """
    budgets = budgets or SearchBudgets()
    if n < 0:
        raise InvalidParameterError(f"n must be non-negative, got {n}")
    bounded = min_degree is not None or max_degree is not None
    limit = MAX_BOUNDED_ENUMERATION_VERTICES if bounded else MAX_ENUMERATION_VERTICES
    if n > limit:
        raise EnumerationLimitError(
            f"Internal enumeration supports n <= {limit}; supply larger graphs as a graph6 stream"
        )
    if n == 0:
        if predicate is None or predicate(Graph(0)):
            yield Graph(0)
        return

    direct = n - 1 if max_degree is None else max(min(max_degree, n - 1), -1)
    via_complement = n - 1 if min_degree is None else n - 1 - max(min_degree, 0)
    if direct < 0 or via_complement < 0:
        return

    if via_complement < direct:
        sparse = _classes_with_max_degree(n, via_complement, budgets)
        representatives = [complement(g) for g in sparse]
    else:
        representatives = _classes_with_max_degree(n, direct, budgets)

    emitted = 0
    for graph in representatives:
        if max_degree is not None and max(graph.degrees) > max_degree:
            continue
        if min_degree is not None and min(graph.degrees) < min_degree:
            continue
        if predicate is not None and not predicate(graph):
            continue
        emitted += 1
        yield graph
    logger.info(f"enumerate_graphs n={n}: {emitted} classes")


def random_graph_stream(
    count: int,
    n_range: tuple[int, int],
    seed: int = DEFAULT_SEED,
    edge_probability: float | tuple[float, float] = 0.5,
) -> Iterator[Graph]:
    """
    Seeded stream of G(n, p) random graphs.

    Args:
        count: Number of graphs
        n_range: Inclusive range for the vertex count
        seed: Seed; the same seed reproduces the same stream
        edge_probability: Fixed p, or an inclusive range p is drawn from per graph

    Raises:
        InvalidParameterError: On an empty range or a probability outside [0, 1]
    """
    low, high = n_range
    if count < 0 or low < 0 or low > high:
        raise InvalidParameterError(f"invalid stream parameters count={count}, n_range={n_range}")
    p_low, p_high = (
        (edge_probability, edge_probability)
        if isinstance(edge_probability, int | float)
        else edge_probability
    )
    if not 0.0 <= p_low <= p_high <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(low, high)
        p = p_low if p_low == p_high else rng.uniform(p_low, p_high)
        yield Graph.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(2**32)))
