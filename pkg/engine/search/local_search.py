"""Local search that builds one individual: k cliques improved by add/drop-weakest moves."""

import logging

import numpy as np

from engine.config.schema import LocalSearchConfig, StartBias
from engine.graph.graph import Graph
from engine.models.common import Clique, Deadline
from engine.solution.solution import Solution

logger = logging.getLogger(__name__)


def find_clique(g: Graph, rng: np.random.Generator, params: LocalSearchConfig) -> Clique:
    """Grow a maximal clique from a sampled start vertex.

    Each step samples ``bms_samples`` candidates (with replacement) from the
    common neighbourhood and keeps the heaviest; ties go to the higher degree
    inside the candidate set, then to the lower id.
    """
    if g.n == 0:
        return ()
    weights = g.weights
    if params.start_bias == StartBias.WEIGHT_PROPORTIONAL:
        w = np.asarray(weights, dtype=np.float64)
        start = int(rng.choice(g.n, p=w / w.sum()))
    else:
        start = int(rng.integers(g.n))

    members = [start]
    candidates = list(g.neighbors(start))
    while candidates:
        if len(candidates) <= params.bms_samples:
            sample = candidates
        else:
            picks = rng.integers(0, len(candidates), size=params.bms_samples).tolist()
            sample = [candidates[i] for i in picks]
        top = max(weights[u] for u in sample)
        tied = sorted({u for u in sample if weights[u] == top})
        if len(tied) == 1:
            chosen = tied[0]
        else:
            chosen = max(tied, key=lambda u: (len(g.neighbors_among(u, candidates)), -u))
        members.append(chosen)
        candidates = g.neighbors_among(chosen, candidates)
    return tuple(sorted(members))


def local_search(
    g: Graph,
    k: int,
    params: LocalSearchConfig,
    rng: np.random.Generator,
    deadline: Deadline | None = None,
    trace: list[int] | None = None,
) -> Solution:
    """Construct k cliques, then repeatedly add a fresh clique and drop the weakest.

    A move is kept only when it strictly raises W; ``m_step`` consecutive
    non-improving steps (or the deadline) end the search. Accepted W values are
    appended to ``trace`` when given.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    deadline = deadline or Deadline.never()

    current = Solution(g, (find_clique(g, rng, params) for _ in range(k)), validate=False)
    if trace is not None:
        trace.append(current.weight)

    step = 0
    while step < params.m_step and not deadline.expired():
        step += 1
        c = find_clique(g, rng, params)
        before = current.weight
        current.add_clique(c, validate=False)
        drop = current.argmin_score()
        dropped = current.remove_clique(drop)
        if current.weight > before:
            step = 0
            if trace is not None:
                trace.append(current.weight)
        elif drop != k:
            # Rejected: take the new clique back out and restore the old one in place.
            current.remove_clique(k - 1)
            current.add_clique(dropped, validate=False, index=drop)

    logger.debug("Local search finished: W=%d", current.weight)
    return current
