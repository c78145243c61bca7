"""Multi-run benchmark harness and result-set comparison."""

import logging
from dataclasses import dataclass, field
from statistics import fmean

from engine.config.loader import with_overrides
from engine.config.schema import BenchSpec, InstanceSpec
from engine.graph.dimacs import GraphFormatError
from engine.graph.graph import Graph
from engine.graph.loader import load_graph
from engine.models.benchmark import BenchRow, ComparisonCounts, ScatterPoint
from engine.models.result import SolveResult
from engine.oracle.exact import OracleLimitError, exact_solve
from engine.pipeline.solve_pipeline import solve

logger = logging.getLogger(__name__)


@dataclass
class BenchReport:
    results: list[SolveResult] = field(default_factory=list)
    rows: list[BenchRow] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)


def _load_instance(inst: InstanceSpec, spec: BenchSpec) -> Graph | None:
    graph_cfg = spec.solver.graph
    try:
        return load_graph(
            inst.path,
            inst.format,
            graph_cfg.weights,
            graph_cfg.dense_threshold,
            name=inst.name or None,
        )
    except (OSError, GraphFormatError, ValueError) as e:
        logger.warning("Skipping instance %s: %s", inst.path, e)
        return None


def _oracle_weight(g: Graph, k: int) -> int | None:
    try:
        weight, _ = exact_solve(g, k)
    except OracleLimitError as e:
        logger.warning("No oracle for %s k=%d: %s", g.name, k, e)
        return None
    return weight


def run_benchmark(
    spec: BenchSpec, runs: int | None = None, with_oracle: bool | None = None
) -> BenchReport:
    """Solve every instance for every k with ``runs`` consecutive seeds.

    Unreadable instances and failing runs are logged and skipped.
    """
    runs = spec.runs if runs is None else runs
    with_oracle = spec.with_oracle if with_oracle is None else with_oracle
    seeds = tuple(spec.base_seed + i for i in range(runs))
    report = BenchReport()

    for inst in spec.instances:
        g = _load_instance(inst, spec)
        if g is None:
            report.skipped.append(inst.path)
            continue
        logger.info("Benchmarking %s (n=%d, m=%d)", g.name, g.n, g.edge_count)

        for k in spec.k_values:
            weights: dict[int, int] = {}
            for seed in seeds:
                cfg = with_overrides(spec.solver, {"k": k, "seed": seed})
                try:
                    result = solve(g, cfg)
                except Exception:
                    logger.exception("Run failed: %s k=%d seed=%d", g.name, k, seed)
                    continue
                report.results.append(result)
                weights[seed] = result.best_weight
            if not weights:
                continue

            best_seed = max(weights, key=lambda s: (weights[s], -s))
            row = BenchRow(
                instance=g.name,
                k=k,
                seeds=tuple(weights),
                best_weight=weights[best_seed],
                avg_weight=fmean(weights.values()),
                best_seed=best_seed,
                oracle_weight=_oracle_weight(g, k) if with_oracle else None,
            )
            report.rows.append(row)
            logger.info(
                "%s k=%d: best %d avg %.1f over %d runs",
                row.instance, k, row.best_weight, row.avg_weight, len(weights),
            )

    return report


def compare_rows(
    own: list[BenchRow], other: list[BenchRow]
) -> tuple[list[ComparisonCounts], list[ScatterPoint]]:
    """N+/N- counts per k over the (instance, k) pairs both sets contain.

    Plus counts instances where ``own`` is strictly better, minus where it is
    strictly worse. Scatter points list pairs whose best results differ.
    """
    theirs = {(r.instance, r.k): r for r in other}
    per_k: dict[int, list[int]] = {}
    points: list[ScatterPoint] = []
    for row in own:
        match = theirs.get((row.instance, row.k))
        if match is None:
            continue
        tally = per_k.setdefault(row.k, [0, 0, 0, 0])
        tally[0] += row.best_weight > match.best_weight
        tally[1] += row.best_weight < match.best_weight
        tally[2] += row.avg_weight > match.avg_weight
        tally[3] += row.avg_weight < match.avg_weight
        if row.best_weight != match.best_weight:
            points.append(ScatterPoint(row.instance, row.k, row.best_weight, match.best_weight))

    counts = [
        ComparisonCounts(k, plus_best=t[0], minus_best=t[1], plus_avg=t[2], minus_avg=t[3])
        for k, t in sorted(per_k.items())
    ]
    return counts, points
