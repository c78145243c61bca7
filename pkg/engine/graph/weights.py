"""Vertex weight schemes."""

import numpy as np

from engine.config.schema import WeightScheme
from engine.graph.graph import Graph


def scheme_weights(n: int, scheme: WeightScheme) -> list[int]:
    """Weights for vertices 0..n-1: all 1 (unit) or (i mod 200) + 1 (mod200)."""
    if scheme == WeightScheme.UNIT:
        return [1] * n
    if scheme == WeightScheme.MOD200:
        return ((np.arange(n, dtype=np.int64) % 200) + 1).tolist()
    raise ValueError(f"Unknown weight scheme: {scheme}")


def assign_weights(g: Graph, scheme: WeightScheme) -> Graph:
    return g.with_weights(scheme_weights(g.n, scheme))
