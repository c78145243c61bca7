"""DIMACS ascii clique-benchmark reader and writer."""

import logging

from engine.graph.graph import DEFAULT_DENSE_THRESHOLD, Graph

logger = logging.getLogger(__name__)


# "col" is the DIMACS colouring keyword; several clique benchmarks ship with it.
PROBLEM_TYPES = ("edge", "col")


class GraphFormatError(ValueError):
    """Malformed graph input; ``line`` is 1-based, 0 when not line-specific."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _to_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(line_no, f"expected an integer, got {token!r}") from None


def _decode(data: bytes | str) -> str:
    return data.decode("ascii", errors="replace") if isinstance(data, bytes) else data


def parse_dimacs(
    data: bytes | str,
    name: str = "",
    dense_threshold: float = DEFAULT_DENSE_THRESHOLD,
) -> Graph:
    """Parse ``c``/``p edge n m``/``e u v`` records into a 0-based Graph.

    ``p col n m`` is read the same way; other problem types are rejected.
    Duplicate edge lines collapse. Weights are unit until assigned.
    """
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []

    for line_no, raw in enumerate(_decode(data).splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError(line_no, "duplicate 'p' line")
            if len(fields) != 4:
                raise GraphFormatError(line_no, "expected 'p edge <n> <m>'")
            if fields[1] not in PROBLEM_TYPES:
                raise GraphFormatError(line_no, f"unsupported problem type {fields[1]!r}")
            n = _to_int(fields[2], line_no)
            declared_m = _to_int(fields[3], line_no)
            if n < 0 or declared_m < 0:
                raise GraphFormatError(line_no, "negative size in 'p' line")
        elif kind == "e":
            if n is None:
                raise GraphFormatError(line_no, "edge line before 'p' line")
            if len(fields) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            u = _to_int(fields[1], line_no)
            v = _to_int(fields[2], line_no)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(line_no, f"vertex {x} out of range [1, {n}]")
            if u == v:
                raise GraphFormatError(line_no, f"self-loop on vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(line_no, f"unknown record type {kind!r}")

    if n is None:
        raise GraphFormatError(0, "missing 'p' line")

    graph = Graph.from_edges(n, edges, name=name, dense_threshold=dense_threshold)
    if graph.edge_count != declared_m:
        logger.debug(
            "%s: 'p' line declares %d edges, read %d distinct",
            name or "<dimacs>", declared_m, graph.edge_count,
        )
    return graph


def write_dimacs(g: Graph) -> bytes:
    """Serialize the structure (not the weights) in DIMACS ascii form."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")
