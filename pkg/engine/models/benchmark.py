"""Benchmark harness models."""

from dataclasses import dataclass


@dataclass(frozen=True)
class BenchRow:
    instance: str
    k: int
    seeds: tuple[int, ...]
    best_weight: int
    avg_weight: float
    best_seed: int
    oracle_weight: int | None = None

    @property
    def gap(self) -> int | None:
        if self.oracle_weight is None:
            return None
        return self.oracle_weight - self.best_weight

    @property
    def relative(self) -> float | None:
        """best / oracle when the exact optimum is known."""
        if not self.oracle_weight:
            return None
        return self.best_weight / self.oracle_weight


@dataclass(frozen=True)
class ComparisonCounts:
    """Instances on which one result set beats (plus) or trails (minus) another."""

    k: int
    plus_best: int
    minus_best: int
    plus_avg: int
    minus_avg: int


@dataclass(frozen=True)
class ScatterPoint:
    instance: str
    k: int
    self_best: int
    other_best: int

    @property
    def relative(self) -> float:
        return self.other_best / self.self_best if self.self_best else 0.0
