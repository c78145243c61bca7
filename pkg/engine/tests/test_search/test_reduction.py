"""Tests for pseudo graph reduction and its repair step."""

import numpy as np

from engine.graph.generators import gen_er
from engine.graph.graph import Graph
from engine.oracle.exact import enumerate_maximal_cliques
from engine.search.reduction import (
    Reduction,
    classify_vertices,
    post_reduction,
    reduction_candidates,
)
from engine.solution.clique import is_clique
from engine.solution.solution import Solution, naive_weight


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestClassifyVertices:
    def test_complete_graph_untouched(self):
        r = classify_vertices(complete(4))
        assert r.iv == frozenset() and r.lv == frozenset()
        assert r.reduced.n == 4
        assert r.reduced.edge_count == 6

    def test_edgeless(self):
        r = classify_vertices(Graph.from_edges(5, []))
        assert r.iv == frozenset(range(5))
        assert r.lv == frozenset()
        assert r.reduced.n == 0

    def test_path_keeps_centre_isolated(self):
        r = classify_vertices(Graph.from_edges(3, [(0, 1), (1, 2)]))
        assert r.lv == frozenset({0, 2})
        assert r.reduced.n == 1
        assert r.reduced.edge_count == 0
        assert r.to_original == (1,)

    def test_single_pass_only(self, path4: Graph):
        # 1 and 2 become leaves of G' but are not removed again.
        r = classify_vertices(path4)
        assert r.lv == frozenset({0, 3})
        assert r.to_original == (1, 2)
        assert r.reduced.edge_count == 1

    def test_reduced_is_induced(self, two_triangles: Graph):
        r = classify_vertices(two_triangles)
        assert r.iv == frozenset({6})
        for i, j in r.reduced.edges():
            assert two_triangles.has_edge(r.to_original[i], r.to_original[j])
        assert r.reduced.edge_count == two_triangles.edge_count

    def test_lift(self, path4: Graph):
        r = classify_vertices(path4)
        lifted = r.lift(Solution(r.reduced, [(0, 1)]), path4)
        assert lifted.cliques == [(1, 2)]
        assert lifted.host is path4


class TestPostReduction:
    def test_heavy_leaf_edge_replaces_triangle(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4)]
        g = Graph.from_edges(5, edges, weights=[1, 1, 1, 5, 5])
        r = classify_vertices(g)
        s = post_reduction(g, r, Solution(g, [(0, 1, 2)]), k=1)
        assert s.cliques == [(3, 4)]
        assert s.weight == 10

    def test_heavy_isolated_vertex(self):
        g = Graph.from_edges(4, [(1, 2), (2, 3), (1, 3)], weights=[7, 1, 1, 1])
        r = classify_vertices(g)
        s = post_reduction(g, r, Solution(g, [(1, 2, 3)]), k=1)
        assert s.cliques == [(0,)]
        assert s.weight == 7

    def test_light_candidate_rejected(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4)]
        g = Graph.from_edges(5, edges)
        r = classify_vertices(g)
        s = post_reduction(g, r, Solution(g, [(0, 1, 2)]), k=1)
        assert s.cliques == [(0, 1, 2)]
        assert s.weight == 3

    def test_identity_when_nothing_removed(self, square: Graph):
        r = classify_vertices(square)
        s = post_reduction(square, r, Solution(square, [(0, 1)]), k=1)
        assert s.cliques == [(0, 1)]

    def test_fills_empty_cliques(self):
        g = Graph.from_edges(5, [])
        r = classify_vertices(g)
        s = post_reduction(g, r, Solution(g, [(), (), ()]), k=3)
        assert len(s) == 3
        assert s.weight == 3

    def test_short_solution_grows_to_k(self, path4: Graph):
        g = path4.with_weights([1, 1, 1, 5])
        r = classify_vertices(g)
        s = post_reduction(g, r, Solution(g), k=2)
        assert s.cliques == [(0, 1), (2, 3)]
        assert s.weight == 8

    def test_path_k2_reaches_optimum(self, path4: Graph):
        r = classify_vertices(path4)
        s = post_reduction(path4, r, Solution(path4, [(1, 2), (1, 2)]), k=2)
        assert sorted(s.cliques) == [(0, 1), (2, 3)]
        assert s.weight == 4

    def test_candidates_ascending(self):
        g = Graph.from_edges(4, [(0, 1)])
        r = classify_vertices(g)
        assert reduction_candidates(g, r) == [(0, 1), (0, 1), (2,), (3,)]

    def test_identity_reduction_has_no_candidates(self, triangle: Graph):
        assert reduction_candidates(triangle, Reduction.identity(triangle)) == []

    def test_never_worsens(self):
        rng = np.random.default_rng(3)
        for trial in range(300):
            g = gen_er(16, 0.12, seed=trial).with_weights(rng.integers(1, 30, size=16).tolist())
            r = classify_vertices(g)
            pool = enumerate_maximal_cliques(g)
            k = int(rng.integers(1, 5))
            s = Solution(g, [pool[int(i)] for i in rng.integers(0, len(pool), size=k)])
            before = s.weight
            post_reduction(g, r, s, k)
            assert s.weight >= before
            assert len(s) == k
            assert all(is_clique(g, c) for c in s.cliques)
            assert s.weight == naive_weight(g, s.cliques)
