"""Solve pipeline: reduction, local search, genetic stage and postprocessing."""

import logging
import time
from collections.abc import Sequence

import numpy as np

from engine.config.schema import BudgetMode, SolverConfig
from engine.graph.graph import Graph
from engine.models.common import Clique, Deadline
from engine.models.result import SolveResult
from engine.pipeline.deadlines import StageDeadlines, compute_deadlines
from engine.reporting.formatters import format_result_text
from engine.reporting.run_summarizer import SolveSummarizer
from engine.search.genetic import Population, genetic_stage
from engine.search.local_search import local_search
from engine.search.postprocess import post_processing
from engine.search.reduction import (
    Reduction,
    classify_vertices,
    post_reduction,
    reduction_candidates,
)
from engine.search.tabu import TabuList
from engine.solution.clique import is_clique
from engine.solution.solution import Solution, naive_weight

logger = logging.getLogger(__name__)


def verify_solution(
    g: Graph, cliques: Sequence[Sequence[int]], k: int, claimed_w: int
) -> list[str]:
    """Check a reported solution against G from scratch. Returns the problems found."""
    errors: list[str] = []
    if len(cliques) > k:
        errors.append(f"{len(cliques)} cliques reported, at most {k} allowed")
    in_range = True
    for i, c in enumerate(cliques):
        bad = [v for v in c if not 0 <= v < g.n]
        if bad:
            errors.append(f"clique {i} has vertices outside [0, {g.n}): {bad}")
            in_range = False
        elif not is_clique(g, c):
            errors.append(f"clique {i} is not a clique: {list(c)}")
    if in_range:
        actual = naive_weight(g, cliques)
        if actual != claimed_w:
            errors.append(f"reported W={claimed_w} but recomputed W={actual}")
    return errors


class SolvePipeline:
    def __init__(self, graph: Graph, config: SolverConfig):
        self.graph = graph
        self.config = config
        self.deterministic = config.budget.mode == BudgetMode.DETERMINISTIC

    def run(self) -> SolveResult:
        """Run every enabled stage and return the verified best-ever solution."""
        cfg = self.config
        g = self.graph
        start = time.monotonic()
        if not self.deterministic:
            # Raises BudgetError before any work when t_max cannot be split.
            compute_deadlines(cfg.budget, 0, cfg.k)

        summarizer = SolveSummarizer(g.name or "graph", cfg)
        rng = np.random.default_rng(cfg.seed)

        # 1. REDUCTION
        if cfg.ablation.reduction:
            reduction = classify_vertices(g)
        else:
            reduction = Reduction.identity(g)
        candidates = reduction_candidates(g, reduction)

        tabu: TabuList | None = None
        if cfg.tabu.enabled:
            tabu = TabuList(g.n, bits=cfg.tabu.bits, seed=int(rng.integers(2**32)))
        population = Population(tabu=tabu)
        generated = 0

        def new_individual(deadline: Deadline) -> Solution:
            nonlocal generated
            s = local_search(reduction.reduced, cfg.k, cfg.local_search, rng, deadline)
            lifted = post_reduction(g, reduction, reduction.lift(s, g), cfg.k, candidates)
            if cfg.check_invariants:
                lifted.check_consistency()
            generated += 1
            logger.debug("Individual %d: W=%d", generated, lifted.weight)
            return lifted

        # 2. LOCAL SEARCH until stopping condition I
        stage_start = time.monotonic()
        if self.deterministic:
            count = max(cfg.budget.ls_individuals, cfg.budget.min_population)
            for _ in range(count):
                population.admit(new_individual(Deadline.never()))
        else:
            while True:
                limits = self._deadlines(len(population))
                enough = len(population) >= cfg.budget.min_population
                if enough and time.monotonic() - start >= limits.ls:
                    break
                # The population floor is filled even past the LS threshold.
                stop = limits.ls if enough else limits.ga
                population.admit(new_individual(Deadline(start + stop)))
        assert population.best is not None
        summarizer.record_population(len(population), generated)
        summarizer.record_stage("ls", time.monotonic() - stage_start, population.best.weight)
        logger.info(
            "Local search stage: population %d, best W=%d",
            len(population), population.best.weight,
        )

        # 3. GENETIC STAGE until stopping condition II
        stage_start = time.monotonic()
        generations = 0
        if cfg.ablation.genetic:
            on_generation = self._check_population if cfg.check_invariants else None
            if self.deterministic:
                generations = genetic_stage(
                    population, rng,
                    max_generations=cfg.budget.ga_generations,
                    on_generation=on_generation,
                )
            else:
                deadline = Deadline(start + self._deadlines(len(population)).ga)
                generations = genetic_stage(
                    population, rng, deadline=deadline, on_generation=on_generation
                )
            logger.info(
                "Genetic stage: %d generations, best W=%d",
                generations, population.best.weight,
            )
        else:
            # Without crossover, local search keeps producing individuals instead.
            extra = 0
            if self.deterministic:
                for _ in range(cfg.budget.ga_generations):
                    population.admit(new_individual(Deadline.never()))
                    extra += 1
            else:
                ga_at = start + self._deadlines(len(population)).ga
                while time.monotonic() < ga_at:
                    population.admit(new_individual(Deadline(ga_at)))
                    extra += 1
            summarizer.record_population(len(population), generated)
            logger.info(
                "Extended local search: %d more individuals, best W=%d",
                extra, population.best.weight,
            )
        summarizer.record_generations(generations)
        summarizer.record_stage("ga", time.monotonic() - stage_start, population.best.weight)

        # 4. POSTPROCESSING until t_max
        stage_start = time.monotonic()
        if cfg.ablation.postprocess:
            deadline = (
                Deadline.never() if self.deterministic
                else Deadline(start + cfg.budget.t_max)
            )
            post_processing(g, population, deadline)
            if cfg.check_invariants:
                self._check_population(0, population)
        summarizer.record_stage("post", time.monotonic() - stage_start, population.best.weight)

        # 5. VERIFY and REPORT
        best = population.best
        reported: list[Clique] = [c for c in best.cliques if c]
        summarizer.record_best(best)
        summarizer.record_tabu(tabu, population.history_count)
        errors = verify_solution(g, reported, cfg.k, best.weight)
        summarizer.record_verification(errors)
        for e in errors:
            logger.warning("Verification failed: %s", e)

        result = summarizer.finalize()
        logger.info("Solve finished in %.2fs", time.monotonic() - start)
        logger.info("\n%s", format_result_text(result))
        return result

    def _deadlines(self, p_size: int) -> StageDeadlines:
        return compute_deadlines(self.config.budget, p_size, self.config.k)

    @staticmethod
    def _check_population(_generation: int, population: Population) -> None:
        for s in population.individuals:
            s.check_consistency()


def solve(g: Graph, config: SolverConfig) -> SolveResult:
    return SolvePipeline(g, config).run()
