"""Text interchange: graph6 lines and plain edge lists.

graph6 encoding and decoding is delegated to networkx; this module adds the
input validation, error reporting and conversion to cyclepack graphs.
"""

import logging
from collections.abc import Iterable, Iterator

import networkx as nx

from cyclepack.exceptions import GraphFormatError
from cyclepack.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 1 << 18


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text: A graph6 string, optionally with the ``>>graph6<<`` header and
            surrounding whitespace

    Returns:
        The decoded Graph

    Raises:
        GraphFormatError: On a malformed header, an out-of-range character,
            a truncated bit payload, or more than 2^18 vertices

    Example:
        >>> parse_graph6("Bw").edges()
        [(0, 1), (0, 2), (1, 2)]
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise GraphFormatError("Empty graph6 string", line=text)
    if line.startswith(":") or line.startswith("&"):
        raise GraphFormatError("sparse6/digraph6 input is not supported", line=text, position=0)
    for position, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise GraphFormatError(
                f"Character {char!r} outside the graph6 range 63..126", line=text, position=position
            )

    n = _header_vertex_count(line, text)
    if n > MAX_GRAPH6_VERTICES:
        raise GraphFormatError(f"Graph with {n} vertices exceeds the 2^18 limit", line=text)

    try:
        nx_graph = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphFormatError(f"Invalid graph6 payload: {e}", line=text) from e
    return Graph.from_networkx(nx_graph)


def _header_vertex_count(line: str, original: str) -> int:
    values = [ord(c) - 63 for c in line]
    if values[0] != 63:
        return values[0]
    if len(values) >= 4 and values[1] != 63:
        return (values[1] << 12) | (values[2] << 6) | values[3]
    if len(values) >= 8 and values[1] == 63:
        n = 0
        for value in values[2:8]:
            n = (n << 6) | value
        return n
    raise GraphFormatError("Truncated graph6 size header", line=original, position=0)


def emit_graph6(graph: Graph) -> str:
    """
    Encode a graph as a graph6 line without header or newline.

    Example:
        >>> emit_graph6(Graph(2))
        'A?'
    """
    if graph.n > MAX_GRAPH6_VERTICES:
        raise GraphFormatError(f"Graph with {graph.n} vertices exceeds the 2^18 limit")
    data = nx.to_graph6_bytes(graph.to_networkx(), nodes=list(range(graph.n)), header=False)
    return data.decode("ascii").strip()


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """
    Decode an edge list: one ``u v`` pair per line, 0-indexed.

    Blank lines and lines starting with ``#`` are ignored.

    Args:
        text: The edge list
        n: Vertex count; defaults to one more than the largest index seen

    Raises:
        GraphFormatError: If a line is not two non-negative integers or an
            index is not below n
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError("Expected two vertex indices", line=raw, position=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"Self loop at vertex {u}", line=raw, position=lineno)
        edges.append((u, v))

    largest = max((max(e) for e in edges), default=-1)
    if n is None:
        n = largest + 1
    elif largest >= n:
        raise GraphFormatError(f"Vertex {largest} out of range for n={n}")
    return Graph(n, edges)


def emit_edge_list(graph: Graph) -> str:
    """Encode a graph as an edge list, one ``u v`` line per edge."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    """
    Decode a stream of graph6 lines, skipping blanks and ``#`` comments.

    Yields:
        (original line, Graph) pairs in input order
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield line, parse_graph6(line)
        except GraphFormatError as e:
            logger.debug(f"graph6 line {lineno} rejected: {e}")
            raise GraphFormatError(f"Line {lineno}: {e.args[0]}", line=line, position=lineno) from e
