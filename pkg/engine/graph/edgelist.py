"""Plain whitespace-separated edge-list reader."""

from engine.graph.dimacs import GraphFormatError, _decode, _to_int
from engine.graph.graph import DEFAULT_DENSE_THRESHOLD, Graph


def parse_edge_list(
    data: bytes | str,
    name: str = "",
    dense_threshold: float = DEFAULT_DENSE_THRESHOLD,
) -> Graph:
    """Parse ``u v`` pairs. Ids are rebased to 0 when the smallest id is at least 1.

    Lines starting with ``#`` or ``%`` are comments.
    """
    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(_decode(data).splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0][0] in "#%":
            continue
        if len(fields) < 2:
            raise GraphFormatError(line_no, "expected '<u> <v>'")
        u = _to_int(fields[0], line_no)
        v = _to_int(fields[1], line_no)
        if u < 0 or v < 0:
            raise GraphFormatError(line_no, "negative vertex id")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop on vertex {u}")
        pairs.append((u, v))

    if not pairs:
        return Graph.from_edges(0, [], name=name, dense_threshold=dense_threshold)

    base = min(min(u, v) for u, v in pairs)
    base = 1 if base >= 1 else 0
    edges = [(u - base, v - base) for u, v in pairs]
    n = max(max(u, v) for u, v in edges) + 1
    return Graph.from_edges(n, edges, name=name, dense_threshold=dense_threshold)
