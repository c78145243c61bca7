"""Final improvement pass: rebuild each individual, then absorb uncovered vertices."""

import logging

from engine.graph.graph import Graph
from engine.models.common import Clique, Deadline
from engine.search.genetic import Population
from engine.solution.solution import Solution

logger = logging.getLogger(__name__)


def _heaviest(g: Graph, vertices: list[int]) -> int:
    """Max weight, lowest id on ties."""
    weights = g.weights
    return max(vertices, key=lambda v: (weights[v], -v))


def _expand(g: Graph, seed: list[int], covered: list[int]) -> Clique:
    """Grow ``seed`` to a maximal clique, taking uncovered vertices first."""
    members = list(seed)
    candidates = g.common_neighbors(members)
    while candidates:
        uncovered = [u for u in candidates if covered[u] == 0]
        chosen = _heaviest(g, uncovered or candidates)
        members.append(chosen)
        candidates = g.neighbors_among(chosen, candidates)
    return tuple(sorted(members))


def rebuild_individual(g: Graph, s: Solution) -> Solution:
    """Rebuild clique by clique: strip already-covered vertices, then re-expand.

    The result covers every vertex ``s`` covers, so W does not drop.
    """
    rebuilt = Solution(g)
    for c in s.cliques:
        seed = [v for v in c if rebuilt.coverage[v] == 0]
        if not seed and g.n:
            uncovered = [v for v in range(g.n) if rebuilt.coverage[v] == 0]
            seed = [_heaviest(g, uncovered or list(range(g.n)))]
        rebuilt.add_clique(_expand(g, seed, rebuilt.coverage) if seed else (), validate=False)
    assert rebuilt.weight >= s.weight, f"rebuild lowered W {s.weight} -> {rebuilt.weight}"
    return rebuilt


def absorb_uncovered(g: Graph, s: Solution) -> Solution:
    """Offer each uncovered vertex v to each clique c as (c & N(v)) + {v}.

    The first replacement that raises W is taken and v is not revisited.
    Mutates and returns ``s``.
    """
    before = s.weight
    for v in range(g.n):
        if s.coverage[v]:
            continue
        for idx, c in enumerate(s.cliques):
            absorbed = g.neighbors_among(v, c)
            absorbed.append(v)
            if s.swap_delta(idx, absorbed) > 0:
                s.replace_clique(idx, absorbed, validate=False)
                break
    assert s.weight >= before, f"absorb lowered W {before} -> {s.weight}"
    return s


def post_processing(
    g: Graph, population: Population, deadline: Deadline | None = None
) -> Population:
    """Improve individuals heaviest-first until the deadline."""
    deadline = deadline or Deadline.never()
    individuals = population.individuals
    order = sorted(range(len(individuals)), key=lambda i: -individuals[i].weight)
    processed = 0
    for i in order:
        if deadline.expired():
            break
        individuals[i] = absorb_uncovered(g, rebuild_individual(g, individuals[i]))
        processed += 1
    population.refresh_best()
    logger.info("Postprocessed %d of %d individuals", processed, len(individuals))
    return population
