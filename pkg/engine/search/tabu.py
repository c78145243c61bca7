"""Solution-based tabu list: three hash functions over three packed bit vectors."""

from collections.abc import Iterable, Sequence
from typing import TypeAlias

import numpy as np

from engine.solution.solution import Solution

HashTriple: TypeAlias = tuple[int, int, int]

DEFAULT_BITS = 100_000_000


class TabuList:
    """Remembers visited solutions by three additive hashes.

    Vertex v carries three random 64-bit keys; h_i(C) is the sum of key_i over
    every vertex occurrence in C (multiset semantics) modulo L. A solution is
    tabu when all three of its bits are set, so collisions can only block.
    """

    def __init__(self, n: int, bits: int = DEFAULT_BITS, seed: int = 0):
        if bits < 1:
            raise ValueError(f"bits must be at least 1, got {bits}")
        rng = np.random.default_rng(seed)
        self.modulus = bits
        self.keys: tuple[list[int], list[int], list[int]] = (
            rng.integers(0, 2**63, size=n, dtype=np.uint64).tolist(),
            rng.integers(0, 2**63, size=n, dtype=np.uint64).tolist(),
            rng.integers(0, 2**63, size=n, dtype=np.uint64).tolist(),
        )
        nbytes = (bits + 7) // 8
        self.vectors: tuple[bytearray, bytearray, bytearray] = (
            bytearray(nbytes),
            bytearray(nbytes),
            bytearray(nbytes),
        )
        self.inserted = 0
        self.blocked = 0

    @classmethod
    def with_keys(cls, keys: Sequence[Sequence[int]], bits: int) -> "TabuList":
        """Tabu list with explicit per-vertex keys (one sequence per hash)."""
        if len(keys) != 3:
            raise ValueError("expected three key tables")
        t = cls(len(keys[0]), bits=bits)
        t.keys = (list(keys[0]), list(keys[1]), list(keys[2]))
        return t

    @property
    def nbytes(self) -> int:
        return sum(len(v) for v in self.vectors)

    def clique_hash(self, clique: Iterable[int]) -> HashTriple:
        k1, k2, k3 = self.keys
        a = b = c = 0
        for v in clique:
            a += k1[v]
            b += k2[v]
            c += k3[v]
        mod = self.modulus
        return a % mod, b % mod, c % mod

    def sum_hashes(self, hashes: Iterable[HashTriple]) -> HashTriple:
        """Hash of a solution whose cliques hash to ``hashes``."""
        a = b = c = 0
        for x, y, z in hashes:
            a += x
            b += y
            c += z
        mod = self.modulus
        return a % mod, b % mod, c % mod

    def hash_solution(self, s: Solution) -> HashTriple:
        return self.sum_hashes(self.clique_hash(c) for c in s.cliques)

    def swap(self, h: HashTriple, out: HashTriple, into: HashTriple) -> HashTriple:
        """Update solution hash ``h`` for a swap of clique hash ``out`` for ``into``."""
        mod = self.modulus
        return (
            (h[0] - out[0] + into[0]) % mod,
            (h[1] - out[1] + into[1]) % mod,
            (h[2] - out[2] + into[2]) % mod,
        )

    def swapped_hash(self, h: HashTriple, out: Iterable[int], into: Iterable[int]) -> HashTriple:
        """Hash after replacing clique ``out`` by ``into`` in a solution hashing to ``h``."""
        return self.swap(h, self.clique_hash(out), self.clique_hash(into))

    def contains(self, h: HashTriple) -> bool:
        v1, v2, v3 = self.vectors
        a, b, c = h
        return bool(
            (v1[a >> 3] >> (a & 7)) & 1
            and (v2[b >> 3] >> (b & 7)) & 1
            and (v3[c >> 3] >> (c & 7)) & 1
        )

    def insert(self, h: HashTriple) -> None:
        for vector, x in zip(self.vectors, h, strict=True):
            vector[x >> 3] |= 1 << (x & 7)
        self.inserted += 1

