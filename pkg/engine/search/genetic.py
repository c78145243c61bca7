"""Population evolution by cyclic best-swap crossover under a solution tabu list."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from engine.models.common import Deadline
from engine.search.tabu import TabuList
from engine.solution.solution import Solution

logger = logging.getLogger(__name__)


@dataclass
class Population:
    individuals: list[Solution] = field(default_factory=list)
    tabu: TabuList | None = None
    best: Solution | None = None
    history_count: int = 0

    def __len__(self) -> int:
        return len(self.individuals)

    def admit(self, s: Solution) -> None:
        """Add an individual, remember it in the tabu list and track best-ever."""
        self.individuals.append(s)
        self._remember(s)
        self.offer_best(s)

    def offer_best(self, s: Solution) -> bool:
        if self.best is None or s.weight > self.best.weight:
            self.best = s.copy()
            return True
        return False

    def refresh_best(self) -> bool:
        improved = False
        for s in self.individuals:
            improved |= self.offer_best(s)
        return improved

    def _remember(self, s: Solution) -> None:
        if self.tabu is not None:
            self.tabu.insert(self.tabu.hash_solution(s))
            self.history_count += 1


def crossover_generation(population: Population, rng: np.random.Generator) -> Population:
    """One generation: shuffle, then let each individual take the best swap from its successor.

    Individual i trades one of its cliques for one clique of individual
    (i + 1) mod |P|, as that individual stands at the time. Candidate swaps are
    tried in descending W delta (ties in enumeration order); tabu results are
    skipped and, when every candidate is tabu, the individual stays as is. The
    best allowed swap is applied even when it lowers W.
    """
    individuals = population.individuals
    size = len(individuals)
    if size < 2:
        raise ValueError(f"crossover needs at least 2 individuals, got {size}")
    tabu = population.tabu

    order = rng.permutation(size).tolist()
    individuals[:] = [individuals[i] for i in order]

    for i in range(size):
        c1 = individuals[i]
        c2 = individuals[(i + 1) % size]
        if not c1.cliques or not c2.cliques:
            continue
        candidates = [
            (c1.swap_delta(a, into), a, b)
            for a in range(len(c1.cliques))
            for b, into in enumerate(c2.cliques)
        ]
        candidates.sort(key=lambda cand: -cand[0])

        if tabu is None:
            _, a, b = candidates[0]
            c1.replace_clique(a, c2.cliques[b], validate=False)
            continue

        out_hashes = [tabu.clique_hash(c) for c in c1.cliques]
        into_hashes = [tabu.clique_hash(c) for c in c2.cliques]
        h = tabu.sum_hashes(out_hashes)
        for _, a, b in candidates:
            h_new = tabu.swap(h, out_hashes[a], into_hashes[b])
            if tabu.contains(h_new):
                tabu.blocked += 1
                continue
            c1.replace_clique(a, c2.cliques[b], validate=False)
            h = h_new
            break
        tabu.insert(h)
        population.history_count += 1

    return population


def genetic_stage(
    population: Population,
    rng: np.random.Generator,
    deadline: Deadline | None = None,
    max_generations: int | None = None,
    on_generation: Callable[[int, Population], None] | None = None,
) -> int:
    """Run generations until the deadline or the generation cap. Returns the count run."""
    deadline = deadline or Deadline.never()
    if len(population) < 2:
        raise ValueError(f"genetic stage needs at least 2 individuals, got {len(population)}")

    generations = 0
    while not deadline.expired():
        if max_generations is not None and generations >= max_generations:
            break
        crossover_generation(population, rng)
        generations += 1
        if population.refresh_best() and population.best is not None:
            logger.debug("Generation %d: best W=%d", generations, population.best.weight)
        if on_generation is not None:
            on_generation(generations, population)
    return generations
