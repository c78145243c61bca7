"""Seeded Erdos-Renyi and Barabasi-Albert instance generators."""

import numpy as np

from engine.graph.graph import Graph


def gen_er(n: int, p: float, seed: int) -> Graph:
    """G(n, p): every unordered pair is an edge independently with probability p."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - u - 1) < p) + (u + 1)
        if hits.size:
            rows.append(np.full(hits.size, u, dtype=np.int64))
            cols.append(hits)
    edges = _stack(rows, cols)
    return Graph.from_edges(n, edges, name=f"er_n{n}_p{p:g}_s{seed}")


def gen_ba(n: int, m: int, seed: int) -> Graph:
    """Preferential attachment grown from a clique on the first m vertices.

    Every new vertex links to m distinct existing vertices chosen with
    probability proportional to degree (uniformly while all degrees are 0).
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if m >= n:
        raise ValueError(f"m must be smaller than n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = [(u, v) for u in range(m) for v in range(u + 1, m)]
    # One entry per edge endpoint, so uniform draws are degree-proportional.
    endpoints: list[int] = [x for e in edges for x in e]

    for v in range(m, n):
        chosen: set[int] = set()
        if not endpoints:
            chosen.update(rng.choice(v, size=m, replace=False).tolist())
        while len(chosen) < m:
            for idx in rng.integers(0, len(endpoints), size=2 * m).tolist():
                chosen.add(endpoints[idx])
                if len(chosen) == m:
                    break
        for u in sorted(chosen):
            edges.append((u, v))
            endpoints.extend((u, v))

    return Graph.from_edges(n, edges, name=f"ba_n{n}_m{m}_s{seed}")


def _stack(rows: list[np.ndarray], cols: list[np.ndarray]) -> np.ndarray:
    if not rows:
        return np.empty((0, 2), dtype=np.int64)
    return np.column_stack([np.concatenate(rows), np.concatenate(cols)])
