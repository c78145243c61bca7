"""File-level graph loading and saving."""

from pathlib import Path

from engine.config.schema import GraphFormat, WeightScheme
from engine.graph.dimacs import parse_dimacs, write_dimacs
from engine.graph.edgelist import parse_edge_list
from engine.graph.graph import DEFAULT_DENSE_THRESHOLD, Graph
from engine.graph.weights import assign_weights


def load_graph(
    path: str | Path,
    fmt: GraphFormat = GraphFormat.DIMACS,
    weights: WeightScheme = WeightScheme.UNIT,
    dense_threshold: float = DEFAULT_DENSE_THRESHOLD,
    name: str | None = None,
) -> Graph:
    """Read a graph file. ``name`` defaults to the file stem."""
    path = Path(path)
    name = name or path.stem
    data = path.read_bytes()
    if fmt == GraphFormat.DIMACS:
        graph = parse_dimacs(data, name=name, dense_threshold=dense_threshold)
    elif fmt == GraphFormat.EDGELIST:
        graph = parse_edge_list(data, name=name, dense_threshold=dense_threshold)
    else:
        raise ValueError(f"Unknown graph format: {fmt}")
    return assign_weights(graph, weights)


def save_graph(g: Graph, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(write_dimacs(g))
    return path
