"""Clique-set solution with incremental coverage and weight accounting."""

from collections.abc import Iterable, Sequence

from engine.graph.graph import Graph
from engine.models.common import Clique, make_clique
from engine.solution.clique import is_clique


class Solution:
    """Ordered multiset of cliques over a host graph.

    ``coverage[v]`` counts the cliques containing v and ``weight`` caches
    W(C), the total weight of covered vertices. Both are updated in O(|c|)
    per add/remove. The clique count is not bounded here; callers keep it
    at k.
    """

    def __init__(self, host: Graph, cliques: Iterable[Sequence[int]] = (), validate: bool = True):
        self.host = host
        self.cliques: list[Clique] = []
        self.coverage: list[int] = [0] * host.n
        self.weight = 0
        for c in cliques:
            self.add_clique(c, validate=validate)

    def __len__(self) -> int:
        return len(self.cliques)

    def __repr__(self) -> str:
        return f"Solution(W={self.weight}, cliques={self.cliques})"

    def copy(self) -> "Solution":
        other = Solution.__new__(Solution)
        other.host = self.host
        other.cliques = list(self.cliques)
        other.coverage = list(self.coverage)
        other.weight = self.weight
        return other

    # --- mutation ---

    def add_clique(
        self, c: Sequence[int], validate: bool = True, index: int | None = None
    ) -> None:
        """Append ``c`` (or insert it at ``index``)."""
        clique = make_clique(c)
        if validate and not is_clique(self.host, clique):
            raise ValueError(f"not a clique in {self.host.name or 'graph'}: {clique}")
        weights = self.host.weights
        coverage = self.coverage
        for v in clique:
            if coverage[v] == 0:
                self.weight += weights[v]
            coverage[v] += 1
        if index is None:
            self.cliques.append(clique)
        else:
            self.cliques.insert(index, clique)

    def remove_clique(self, idx: int) -> Clique:
        self._check_index(idx)
        clique = self.cliques.pop(idx)
        weights = self.host.weights
        coverage = self.coverage
        for v in clique:
            coverage[v] -= 1
            if coverage[v] == 0:
                self.weight -= weights[v]
        return clique

    def replace_clique(self, idx: int, c: Sequence[int], validate: bool = True) -> Clique:
        """Swap the clique at ``idx`` for ``c`` in place, keeping positions stable."""
        self._check_index(idx)
        clique = make_clique(c)
        if validate and not is_clique(self.host, clique):
            raise ValueError(f"not a clique in {self.host.name or 'graph'}: {clique}")
        weights = self.host.weights
        coverage = self.coverage
        old = self.cliques[idx]
        for v in clique:
            if coverage[v] == 0:
                self.weight += weights[v]
            coverage[v] += 1
        for v in old:
            coverage[v] -= 1
            if coverage[v] == 0:
                self.weight -= weights[v]
        self.cliques[idx] = clique
        return old

    # --- queries ---

    def covered_vertices(self) -> list[int]:
        return [v for v, count in enumerate(self.coverage) if count > 0]

    def covered_count(self) -> int:
        return sum(1 for count in self.coverage if count > 0)

    def priv(self, idx: int) -> list[int]:
        """Vertices of clique ``idx`` covered by no other clique."""
        self._check_index(idx)
        coverage = self.coverage
        return [v for v in self.cliques[idx] if coverage[v] == 1]

    def score(self, idx: int) -> int:
        """Loss in W from deleting clique ``idx``."""
        self._check_index(idx)
        coverage = self.coverage
        weights = self.host.weights
        return sum(weights[v] for v in self.cliques[idx] if coverage[v] == 1)

    def argmin_score(self) -> int:
        """Index of the minimum-score clique; ties go to the lowest index."""
        if not self.cliques:
            raise IndexError("argmin_score on an empty solution")
        best_idx = 0
        best = self.score(0)
        for idx in range(1, len(self.cliques)):
            s = self.score(idx)
            if s < best:
                best, best_idx = s, idx
        return best_idx

    def swap_delta(self, out_idx: int, c_in: Sequence[int]) -> int:
        """W after replacing clique ``out_idx`` with ``c_in``, minus W now."""
        self._check_index(out_idx)
        coverage = self.coverage
        weights = self.host.weights
        c_out = self.cliques[out_idx]
        in_set = set(c_in)
        gain = 0
        for v in in_set:
            if coverage[v] == 0:
                gain += weights[v]
        loss = 0
        for v in c_out:
            if coverage[v] == 1 and v not in in_set:
                loss += weights[v]
        return gain - loss

    def check_consistency(self) -> None:
        """Recount coverage and weight from scratch; AssertionError on drift."""
        recount = [0] * self.host.n
        for c in self.cliques:
            for v in c:
                recount[v] += 1
        assert recount == self.coverage, "coverage drifted from recount"
        resum = sum(w for w, count in zip(self.host.weights, recount, strict=True) if count > 0)
        assert resum == self.weight, f"cached W={self.weight} but recomputed {resum}"

    def _check_index(self, idx: int) -> None:
        if not 0 <= idx < len(self.cliques):
            raise IndexError(f"clique index {idx} out of range [0, {len(self.cliques)})")


def naive_weight(g: Graph, cliques: Iterable[Sequence[int]]) -> int:
    """W recomputed from the union of the cliques."""
    covered: set[int] = set()
    for c in cliques:
        covered.update(c)
    return sum(g.weights[v] for v in covered)
