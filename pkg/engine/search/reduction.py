"""Pseudo graph reduction: set degree-0/1 vertices aside, repair afterwards."""

import logging
from dataclasses import dataclass

from engine.graph.graph import Graph
from engine.models.common import Clique, make_clique
from engine.solution.solution import Solution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reduction:
    """Isolated (iv) and leaf (lv) vertices of G, and G' induced by the rest.

    ``to_original[i]`` is the original id of reduced vertex i.
    """

    iv: frozenset[int]
    lv: frozenset[int]
    reduced: Graph
    to_original: tuple[int, ...]

    @classmethod
    def identity(cls, g: Graph) -> "Reduction":
        return cls(frozenset(), frozenset(), g, tuple(range(g.n)))

    @property
    def removed(self) -> list[int]:
        return sorted(self.iv | self.lv)

    def lift(self, s: Solution, g: Graph) -> Solution:
        """Express a solution over G' in original vertex ids."""
        back = self.to_original
        return Solution(g, (tuple(back[v] for v in c) for c in s.cliques), validate=False)


def classify_vertices(g: Graph) -> Reduction:
    """One pass over degrees in G; G' is not reduced again."""
    degrees = g.degrees()
    iv = frozenset(v for v, d in enumerate(degrees) if d == 0)
    lv = frozenset(v for v, d in enumerate(degrees) if d == 1)
    keep = [v for v, d in enumerate(degrees) if d > 1]
    reduced, to_original = g.induced_subgraph(keep)
    logger.info(
        "Reduction: %d isolated, %d leaf, reduced graph n=%d m=%d",
        len(iv), len(lv), reduced.n, reduced.edge_count,
    )
    return Reduction(iv=iv, lv=lv, reduced=reduced, to_original=to_original)


def reduction_candidates(g: Graph, r: Reduction) -> list[Clique]:
    """N(v) + {v} for every set-aside vertex, ascending by v."""
    return [make_clique((v, *g.neighbors(v))) for v in r.removed]


def post_reduction(
    g: Graph,
    r: Reduction,
    s: Solution,
    k: int,
    candidates: list[Clique] | None = None,
) -> Solution:
    """Try each set-aside vertex's clique against the weakest clique of ``s``.

    Mutates and returns ``s``. The clique count is kept (filled up to k when
    short) and W never decreases.
    """
    if candidates is None:
        candidates = reduction_candidates(g, r)
    before = s.weight
    for c_new in candidates:
        w_new = g.clique_weight(c_new)
        if len(s) < k:
            if not s.cliques or w_new > min(s.score(i) for i in range(len(s))):
                s.add_clique(c_new, validate=False)
            continue
        if w_new > s.score(s.argmin_score()):
            s.add_clique(c_new, validate=False)
            s.remove_clique(s.argmin_score())
    assert s.weight >= before, f"post_reduction lowered W {before} -> {s.weight}"
    return s
