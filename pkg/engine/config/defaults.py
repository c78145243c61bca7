"""Benchmark grid used for the random-graph suite and default k values."""

from dataclasses import dataclass

K_VALUES: tuple[int, ...] = (10, 20, 30, 40, 50)
RUNS_PER_INSTANCE = 10
CUTOFF_SECONDS = 600.0

RANDOM_VERTEX_COUNTS: tuple[int, ...] = (1000, 2000, 4000, 8000, 16000)
ER_DENSITIES: tuple[float, ...] = (0.001, 0.01, 0.05, 0.1, 0.2, 0.4)
BA_ATTACHMENTS: tuple[int, ...] = (1, 10, 50, 100, 200, 400, 800)


@dataclass(frozen=True)
class RandomGraphSpec:
    model: str  # "er" or "ba"
    n: int
    p: float = 0.0
    m: int = 0

    @property
    def name(self) -> str:
        if self.model == "er":
            return f"er_n{self.n}_p{self.p:g}"
        return f"ba_n{self.n}_m{self.m}"


def random_suite(scale: float = 1.0) -> list[RandomGraphSpec]:
    """The ER/BA grid, with vertex counts multiplied by ``scale``.

    BA settings whose attachment count does not fit the scaled vertex count
    are dropped.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    specs: list[RandomGraphSpec] = []
    for n_full in RANDOM_VERTEX_COUNTS:
        n = max(2, round(n_full * scale))
        for p in ER_DENSITIES:
            specs.append(RandomGraphSpec(model="er", n=n, p=p))
        for m in BA_ATTACHMENTS:
            if m < n:
                specs.append(RandomGraphSpec(model="ba", n=n, m=m))
    return specs
