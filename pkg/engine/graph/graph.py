"""Immutable vertex-weighted undirected graph backed by a CSR adjacency matrix."""

from collections.abc import Iterable, Iterator, Sequence

import numpy as np
from scipy import sparse

DEFAULT_DENSE_THRESHOLD = 0.05


class Graph:
    """Undirected simple graph with positive integer vertex weights.

    Neighbour lists are slices of the CSR structure, so they are sorted and
    free of duplicates. Adjacency tests use one of two indexes, never both:
    at or above ``dense_threshold`` every vertex gets a bit-row (a Python int),
    below it a frozenset of neighbours.
    """

    def __init__(
        self,
        adjacency: sparse.csr_matrix,
        weights: Sequence[int] | None = None,
        name: str = "",
        dense_threshold: float = DEFAULT_DENSE_THRESHOLD,
    ):
        n = adjacency.shape[0]
        if adjacency.shape != (n, n):
            raise ValueError(f"adjacency must be square, got {adjacency.shape}")
        if weights is None:
            weights = [1] * n
        if len(weights) != n:
            raise ValueError(f"expected {n} weights, got {len(weights)}")
        if any(int(w) < 1 for w in weights):
            raise ValueError("vertex weights must be positive integers")

        self.adjacency = adjacency
        self.n = n
        self.name = name
        self.dense_threshold = dense_threshold
        self.weights: tuple[int, ...] = tuple(int(w) for w in weights)

        self._indptr: np.ndarray = adjacency.indptr
        self._indices: np.ndarray = adjacency.indices
        self.edge_count = int(adjacency.nnz) // 2

        self.bit_rows: list[int] | None = None
        self._neighbor_sets: list[frozenset[int]] | None = None
        if n > 1 and self.density >= dense_threshold:
            self.bit_rows = [_to_bits(self.neighbors(v)) for v in range(n)]
        else:
            self._neighbor_sets = [frozenset(self.neighbors(v)) for v in range(n)]

        self._check_structure()

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] | np.ndarray,
        weights: Sequence[int] | None = None,
        name: str = "",
        dense_threshold: float = DEFAULT_DENSE_THRESHOLD,
    ) -> "Graph":
        """Build a graph from 0-based edge pairs. Duplicate edges collapse."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if pairs.size:
            if pairs.min() < 0 or pairs.max() >= n:
                raise ValueError(f"edge endpoint out of range [0, {n})")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise ValueError("self-loops are not allowed")
        if n == 0:
            return cls(sparse.csr_matrix((0, 0), dtype=np.int8), weights=weights, name=name)
        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        data = np.ones(len(rows), dtype=np.int8)
        adj = sparse.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr()
        adj.sum_duplicates()
        adj.data[:] = 1
        adj.sort_indices()
        return cls(adj, weights=weights, name=name, dense_threshold=dense_threshold)

    # --- queries ---

    @property
    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return 2 * self.edge_count / (self.n * (self.n - 1))

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def neighbors(self, v: int) -> tuple[int, ...]:
        lo, hi = self._indptr[v], self._indptr[v + 1]
        return tuple(self._indices[lo:hi].tolist())

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> list[int]:
        return [int(d) for d in np.diff(self._indptr)]

    def has_edge(self, u: int, v: int) -> bool:
        if self.bit_rows is not None:
            return bool((self.bit_rows[u] >> v) & 1)
        assert self._neighbor_sets is not None
        return v in self._neighbor_sets[u]

    def neighbors_among(self, v: int, vertices: Iterable[int]) -> list[int]:
        """Members of ``vertices`` adjacent to ``v``, in their given order."""
        if self.bit_rows is not None:
            row = self.bit_rows[v]
            return [u for u in vertices if (row >> u) & 1]
        assert self._neighbor_sets is not None
        adj = self._neighbor_sets[v]
        return [u for u in vertices if u in adj]

    def common_neighbors(self, vertices: Sequence[int]) -> list[int]:
        """Vertices adjacent to every member of ``vertices``, ascending.

        For an empty input every vertex qualifies.
        """
        if not vertices:
            return list(range(self.n))
        if self.bit_rows is not None:
            mask = self.bit_rows[vertices[0]]
            for v in vertices[1:]:
                mask &= self.bit_rows[v]
            return _from_bits(mask)
        assert self._neighbor_sets is not None
        pivot = min(vertices, key=self.degree)
        common = set(self._neighbor_sets[pivot])
        for v in vertices:
            if v != pivot:
                common &= self._neighbor_sets[v]
        return sorted(common)

    def clique_weight(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if v > u:
                    yield u, v

    # --- derived graphs ---

    def with_weights(self, weights: Sequence[int]) -> "Graph":
        return Graph(
            self.adjacency, weights=weights, name=self.name, dense_threshold=self.dense_threshold
        )

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """G[vertices] plus the map from new ids to original ids."""
        keep = np.asarray(sorted(set(vertices)), dtype=np.int64)
        if keep.size == 0:
            empty = sparse.csr_matrix((0, 0), dtype=np.int8)
            return Graph(empty, weights=[], name=self.name), ()
        sub = self.adjacency[keep][:, keep].tocsr()
        sub.sort_indices()
        weights = [self.weights[v] for v in keep.tolist()]
        graph = Graph(sub, weights=weights, name=self.name, dense_threshold=self.dense_threshold)
        return graph, tuple(keep.tolist())

    def same_structure(self, other: "Graph") -> bool:
        return (
            self.n == other.n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, n={self.n}, m={self.edge_count})"

    def _check_structure(self) -> None:
        if self.n == 0:
            return
        assert not self.adjacency.diagonal().any(), "self-loop in adjacency"
        assert (self.adjacency != self.adjacency.T).nnz == 0, "asymmetric adjacency"


def _to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _from_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
