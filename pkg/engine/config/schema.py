"""Pydantic v2 configuration schema with strict validation."""

from enum import StrEnum

from pydantic import BaseModel, Field, model_validator


class WeightScheme(StrEnum):
    UNIT = "unit"
    MOD200 = "mod200"


class StartBias(StrEnum):
    UNIFORM = "uniform"
    WEIGHT_PROPORTIONAL = "weight-proportional"


class BudgetMode(StrEnum):
    WALL_CLOCK = "wall-clock"
    DETERMINISTIC = "deterministic"


class GraphFormat(StrEnum):
    DIMACS = "dimacs"
    EDGELIST = "edgelist"


class LocalSearchConfig(BaseModel):
    model_config = {"extra": "forbid"}

    m_step: int = Field(default=100, ge=1)
    bms_samples: int = Field(default=64, ge=1)
    start_bias: StartBias = StartBias.UNIFORM


class TabuConfig(BaseModel):
    model_config = {"extra": "forbid"}

    enabled: bool = True
    bits: int = Field(default=100_000_000, ge=1)


class BudgetConfig(BaseModel):
    model_config = {"extra": "forbid"}

    mode: BudgetMode = BudgetMode.WALL_CLOCK
    t_max: float = Field(default=600.0, gt=0.0)
    post_reserve: float = Field(default=6.0, ge=0.0)
    ga_base_reserve: float = Field(default=10.0, ge=0.0)
    ga_per_individual: float = Field(default=0.1, ge=0.0)
    scale_below: float = Field(default=30.0, gt=0.0)
    min_population: int = Field(default=2, ge=2)
    ls_individuals: int = Field(default=100, ge=0)
    ga_generations: int = Field(default=50, ge=0)

    @model_validator(mode="after")
    def _reserves_fit(self) -> "BudgetConfig":
        # Below scale_below the reserves shrink proportionally, so only
        # full-scale budgets must fit them as given.
        if (
            self.mode == BudgetMode.WALL_CLOCK
            and self.t_max >= self.scale_below
            and self.t_max <= self.post_reserve + self.ga_base_reserve
        ):
            raise ValueError(
                f"t_max={self.t_max} must exceed post_reserve + ga_base_reserve "
                f"({self.post_reserve + self.ga_base_reserve})"
            )
        return self


class AblationConfig(BaseModel):
    model_config = {"extra": "forbid"}

    reduction: bool = True
    genetic: bool = True
    postprocess: bool = True


class GraphConfig(BaseModel):
    model_config = {"extra": "forbid"}

    weights: WeightScheme = WeightScheme.UNIT
    dense_threshold: float = Field(default=0.05, ge=0.0, le=1.0)


class SolverConfig(BaseModel):
    model_config = {"extra": "forbid"}

    k: int = Field(default=10, ge=1)
    seed: int = Field(default=0, ge=0)
    check_invariants: bool = False
    local_search: LocalSearchConfig = LocalSearchConfig()
    tabu: TabuConfig = TabuConfig()
    budget: BudgetConfig = BudgetConfig()
    ablation: AblationConfig = AblationConfig()
    graph: GraphConfig = GraphConfig()


class InstanceSpec(BaseModel):
    model_config = {"extra": "forbid"}

    path: str
    format: GraphFormat = GraphFormat.DIMACS
    name: str = ""


class BenchSpec(BaseModel):
    """A benchmark run: instances x k values x seeds, sharing one solver config."""

    model_config = {"extra": "forbid"}

    instances: list[InstanceSpec] = []
    k_values: list[int] = Field(default=[10, 20, 30, 40, 50], min_length=1)
    runs: int = Field(default=10, ge=1)
    base_seed: int = Field(default=0, ge=0)
    with_oracle: bool = False
    solver: SolverConfig = SolverConfig()
