"""Stage stopping thresholds derived from the total time budget."""

from dataclasses import dataclass

from engine.config.schema import BudgetConfig, BudgetMode

MIN_STAGE_SECONDS = 1.0


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class StageDeadlines:
    """Elapsed-seconds thresholds: local search stops at ``ls``, the genetic stage at
    ``ga``, postprocessing at ``end``."""

    ls: float
    ga: float
    end: float


def compute_deadlines(b: BudgetConfig, p_size: int, k: int) -> StageDeadlines:
    """ga = t_max - post_reserve; ls = ga - ga_base_reserve - p_size * k * ga_per_individual.

    Budgets shorter than ``scale_below`` shrink all three reserves by
    t_max / scale_below. Local search and the genetic stage each keep at
    least one second.
    """
    if b.mode != BudgetMode.WALL_CLOCK:
        raise BudgetError("stage deadlines apply to wall-clock budgets only")
    scale = min(1.0, b.t_max / b.scale_below)
    post = b.post_reserve * scale
    base = b.ga_base_reserve * scale
    per_individual = b.ga_per_individual * scale

    ga = b.t_max - post
    if ga < 2 * MIN_STAGE_SECONDS:
        raise BudgetError(
            f"t_max={b.t_max}s leaves {ga:.2f}s before postprocessing; "
            f"need at least {2 * MIN_STAGE_SECONDS:.0f}s"
        )
    ls = ga - base - p_size * k * per_individual
    ls = min(max(ls, MIN_STAGE_SECONDS), ga - MIN_STAGE_SECONDS)
    return StageDeadlines(ls=ls, ga=ga, end=b.t_max)
