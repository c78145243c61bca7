"""Clique validity checks."""

from collections.abc import Sequence

from engine.graph.graph import Graph


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    """True iff every pair of distinct members is adjacent. Empty and singleton sets qualify."""
    for v in vertices:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range [0, {g.n})")
    members = list(dict.fromkeys(vertices))
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not g.has_edge(u, v):
                return False
    return True


def is_maximal_clique(g: Graph, vertices: Sequence[int]) -> bool:
    if not is_clique(g, vertices):
        return False
    if not vertices:
        return g.n == 0
    return not g.common_neighbors(list(vertices))
