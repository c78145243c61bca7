"""Solve result models."""

from dataclasses import dataclass, field
from typing import Any

from engine.models.common import Clique


@dataclass
class StageTimings:
    ls: float = 0.0
    ga: float = 0.0
    post: float = 0.0


@dataclass
class TabuStats:
    inserted: int = 0
    blocked: int = 0
    history: int = 0


@dataclass
class SolveResult:
    instance: str
    k: int
    seed: int
    best_weight: int
    covered_count: int
    cliques: list[Clique]
    timings: StageTimings = field(default_factory=StageTimings)
    population_size: int = 0
    individuals_generated: int = 0
    generations: int = 0
    tabu: TabuStats = field(default_factory=TabuStats)
    stage_best: dict[str, int] = field(default_factory=dict)
    config: dict[str, Any] = field(default_factory=dict)
    config_hash: str = ""
    valid: bool = False
    errors: list[str] = field(default_factory=list)
