"""Solve summarizer: aggregates stage outputs into a SolveResult."""

from engine.config.loader import config_hash
from engine.config.schema import BudgetMode, SolverConfig
from engine.models.result import SolveResult, TabuStats
from engine.search.tabu import TabuList
from engine.solution.solution import Solution


class SolveSummarizer:
    def __init__(self, instance: str, config: SolverConfig):
        self.result = SolveResult(
            instance=instance,
            k=config.k,
            seed=config.seed,
            best_weight=0,
            covered_count=0,
            cliques=[],
            config=config.model_dump(mode="json"),
            config_hash=config_hash(config),
        )
        # Wall timings are not reproducible, so deterministic runs report zeros.
        self._record_timings = config.budget.mode == BudgetMode.WALL_CLOCK

    def record_stage(self, stage: str, seconds: float, best_weight: int | None) -> None:
        if self._record_timings:
            setattr(self.result.timings, stage, seconds)
        if best_weight is not None:
            self.result.stage_best[stage] = best_weight

    def record_population(self, size: int, generated: int) -> None:
        self.result.population_size = size
        self.result.individuals_generated = generated

    def record_generations(self, generations: int) -> None:
        self.result.generations = generations

    def record_tabu(self, tabu: TabuList | None, history: int) -> None:
        """``history`` counts population states the run remembered as tabu."""
        if tabu is not None:
            self.result.tabu = TabuStats(
                inserted=tabu.inserted, blocked=tabu.blocked, history=history
            )

    def record_best(self, best: Solution) -> None:
        self.result.best_weight = best.weight
        self.result.covered_count = best.covered_count()
        self.result.cliques = [tuple(c) for c in best.cliques if c]

    def record_verification(self, errors: list[str]) -> None:
        self.result.errors.extend(errors)
        self.result.valid = not errors

    def finalize(self) -> SolveResult:
        return self.result
