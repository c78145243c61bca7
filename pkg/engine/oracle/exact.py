"""Exhaustive DTkWC solver over maximal cliques, for tiny instances and tests."""

import logging
from math import comb

import networkx as nx

from engine.graph.graph import Graph
from engine.models.common import Clique
from engine.solution.solution import Solution

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUBSETS = 2_000_000


class OracleLimitError(ValueError):
    pass


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def enumerate_maximal_cliques(g: Graph) -> list[Clique]:
    """All maximal cliques via pivoting Bron-Kerbosch, each sorted, listed in ascending order."""
    found = {tuple(sorted(c)) for c in nx.find_cliques(to_networkx(g))}
    return sorted(found)


def exact_solve(
    g: Graph, k: int, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> tuple[int, Solution]:
    """Optimal W over all sets of at most k maximal cliques, with a witness.

    Enlarging a clique never shrinks coverage, so maximal cliques suffice.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    cliques = enumerate_maximal_cliques(g)
    m = len(cliques)
    if k >= m:
        witness = Solution(g, cliques, validate=False)
        return witness.weight, witness

    subsets = sum(comb(m, i) for i in range(1, k + 1))
    if subsets > max_subsets:
        raise OracleLimitError(
            f"{m} maximal cliques with k={k} gives {subsets} subsets (cap {max_subsets})"
        )

    weights = g.weights
    masks = [sum(1 << v for v in c) for c in cliques]
    # suffix[j]: union of cliques j..m-1, an upper bound on what remains reachable.
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] | masks[j]

    memo: dict[int, int] = {}

    def weight_of(mask: int) -> int:
        cached = memo.get(mask)
        if cached is None:
            cached = 0
            rest = mask
            while rest:
                low = rest & -rest
                cached += weights[low.bit_length() - 1]
                rest ^= low
            memo[mask] = cached
        return cached

    best_w = 0
    best_pick: list[int] = []
    pick: list[int] = []

    def search(start: int, mask: int) -> None:
        nonlocal best_w, best_pick
        w = weight_of(mask)
        if w > best_w:
            best_w, best_pick = w, list(pick)
        if len(pick) == k or start == m:
            return
        if weight_of(mask | suffix[start]) <= best_w:
            return
        for j in range(start, m):
            pick.append(j)
            search(j + 1, mask | masks[j])
            pick.pop()

    search(0, 0)
    witness = Solution(g, (cliques[j] for j in best_pick), validate=False)
    logger.debug("Oracle: %d maximal cliques, k=%d, optimum W=%d", m, k, best_w)
    return best_w, witness
