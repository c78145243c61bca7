"""Tests for clique checks and incremental Solution accounting."""

import numpy as np
import pytest

from engine.graph.generators import gen_er
from engine.graph.graph import Graph
from engine.oracle.exact import enumerate_maximal_cliques
from engine.solution.clique import is_clique, is_maximal_clique
from engine.solution.solution import Solution, naive_weight


class TestIsClique:
    def test_triangle(self, triangle: Graph):
        assert is_clique(triangle, [0, 1, 2])

    def test_path(self, path4: Graph):
        assert not is_clique(path4, [0, 1, 2])
        assert is_clique(path4, [1, 2])

    def test_trivial_sets(self, path4: Graph):
        assert is_clique(path4, [])
        assert is_clique(path4, [3])

    def test_out_of_range(self, triangle: Graph):
        with pytest.raises(IndexError):
            is_clique(triangle, [0, 3])

    def test_maximal(self, two_triangles: Graph):
        assert is_maximal_clique(two_triangles, [0, 1, 2])
        assert is_maximal_clique(two_triangles, [2, 3])
        assert not is_maximal_clique(two_triangles, [0, 1])
        assert is_maximal_clique(two_triangles, [6])


class TestSolutionWeight:
    def test_overlap_counted_once(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)], weights=[1, 1, 1])
        s = Solution(g, [(0, 1), (1, 2)])
        assert s.weight == 3
        assert s.coverage == [1, 2, 1]

    def test_weighted(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)], weights=[5, 3, 2])
        assert Solution(g, [(0, 1)]).weight == 8

    def test_empty(self, triangle: Graph):
        s = Solution(triangle)
        assert s.weight == 0
        assert len(s) == 0
        assert s.covered_count() == 0

    def test_invalid_clique_rejected(self, path4: Graph):
        with pytest.raises(ValueError, match="not a clique"):
            Solution(path4, [(0, 2)])

    def test_cliques_stored_sorted(self, triangle: Graph):
        s = Solution(triangle, [(2, 0, 1)])
        assert s.cliques == [(0, 1, 2)]


class TestPrivAndScore:
    def test_shared_vertex_not_private(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)], weights=[1, 1, 1])
        s = Solution(g, [(0, 1), (1, 2)])
        assert s.priv(0) == [0]
        assert s.score(0) == 1

    def test_identical_cliques_have_zero_score(self, triangle: Graph):
        s = Solution(triangle, [(0, 1, 2), (0, 1, 2)])
        assert s.priv(0) == []
        assert s.score(0) == 0
        assert s.score(1) == 0

    def test_bad_index(self, triangle: Graph):
        s = Solution(triangle, [(0, 1)])
        with pytest.raises(IndexError):
            s.score(1)
        with pytest.raises(IndexError):
            s.priv(-1)

    def test_argmin_lowest_index_on_tie(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)], weights=[2, 2, 1, 3])
        s = Solution(g, [(0, 1), (2, 3)])
        assert s.argmin_score() == 0

    def test_argmin_empty(self, triangle: Graph):
        with pytest.raises(IndexError):
            Solution(triangle).argmin_score()


class TestMutation:
    def test_add_then_remove_restores(self, two_triangles: Graph):
        s = Solution(two_triangles, [(0, 1, 2)])
        before = (list(s.coverage), s.weight)
        s.add_clique((2, 3))
        assert s.weight == 4
        removed = s.remove_clique(1)
        assert removed == (2, 3)
        assert (s.coverage, s.weight) == before

    def test_add_at_index(self, two_triangles: Graph):
        s = Solution(two_triangles, [(0, 1, 2), (3, 4, 5)])
        s.add_clique((6,), index=1)
        assert s.cliques == [(0, 1, 2), (6,), (3, 4, 5)]

    def test_replace(self, two_triangles: Graph):
        s = Solution(two_triangles, [(0, 1, 2)])
        old = s.replace_clique(0, (2, 3))
        assert old == (0, 1, 2)
        assert s.cliques == [(2, 3)]
        assert s.weight == 2
        s.check_consistency()

    def test_copy_is_independent(self, triangle: Graph):
        s = Solution(triangle, [(0, 1)])
        t = s.copy()
        t.add_clique((2,))
        assert s.weight == 2 and t.weight == 3
        assert s.coverage == [1, 1, 0]

    def test_remove_bad_index(self, triangle: Graph):
        with pytest.raises(IndexError):
            Solution(triangle).remove_clique(0)


class TestSwapDelta:
    def test_gain(self, two_triangles: Graph):
        s = Solution(two_triangles, [(0, 1, 2), (0, 1)])
        assert s.swap_delta(1, (3, 4, 5)) == 3

    def test_loss(self, two_triangles: Graph):
        s = Solution(two_triangles, [(0, 1, 2), (3, 4, 5)])
        assert s.swap_delta(1, (6,)) == -2

    def test_same_clique_zero(self, triangle: Graph):
        s = Solution(triangle, [(0, 1, 2)])
        assert s.swap_delta(0, (0, 1, 2)) == 0

    def test_matches_naive_recomputation(self):
        rng = np.random.default_rng(5)
        for trial in range(100):
            g = gen_er(14, 0.35, seed=trial).with_weights(
                rng.integers(1, 20, size=14).tolist()
            )
            pool = enumerate_maximal_cliques(g)
            picks = rng.integers(0, len(pool), size=3).tolist()
            s = Solution(g, [pool[i] for i in picks])
            out_idx = int(rng.integers(0, 3))
            into = pool[int(rng.integers(0, len(pool)))]
            swapped = [c for i, c in enumerate(s.cliques) if i != out_idx] + [into]
            assert s.swap_delta(out_idx, into) == naive_weight(g, swapped) - s.weight

    def test_incremental_matches_recount(self):
        rng = np.random.default_rng(8)
        g = gen_er(20, 0.3, seed=1)
        pool = enumerate_maximal_cliques(g)
        s = Solution(g)
        for _ in range(300):
            if len(s) < 2 or rng.random() < 0.5:
                s.add_clique(pool[int(rng.integers(0, len(pool)))])
            else:
                s.remove_clique(int(rng.integers(0, len(s))))
            assert s.weight == naive_weight(g, s.cliques)
        s.check_consistency()
