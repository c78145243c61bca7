"""Output formatters for solve results and benchmark rows."""

import json
from typing import Any

from engine.models.benchmark import BenchRow, ComparisonCounts
from engine.models.result import SolveResult


def result_to_dict(r: SolveResult) -> dict[str, Any]:
    """Result file schema. Keys and nesting are part of the file format."""
    return {
        "instance": r.instance,
        "k": r.k,
        "seed": r.seed,
        "config": r.config,
        "configHash": r.config_hash,
        "bestW": r.best_weight,
        "coveredCount": r.covered_count,
        "cliques": [list(c) for c in r.cliques],
        "timings": {"ls": r.timings.ls, "ga": r.timings.ga, "post": r.timings.post},
        "populationSize": r.population_size,
        "individualsGenerated": r.individuals_generated,
        "generations": r.generations,
        "tabu": {
            "inserted": r.tabu.inserted,
            "blocked": r.tabu.blocked,
            "history": r.tabu.history,
        },
        "stageBest": r.stage_best,
        "valid": r.valid,
        "errors": r.errors,
    }


def format_result_json(r: SolveResult) -> str:
    return json.dumps(result_to_dict(r), indent=2, sort_keys=True)


def format_result_text(r: SolveResult) -> str:
    """Plain text summary for logging."""
    status = "verified" if r.valid else "INVALID"
    lines = [
        f"=== Solve Complete ({status}) | {r.instance} k={r.k} seed={r.seed} ===",
        f"Best W: {r.best_weight} | covered {r.covered_count} vertices "
        f"with {len(r.cliques)} cliques",
        f"Population: {r.population_size} ({r.individuals_generated} generated) | "
        f"Generations: {r.generations}",
        f"Tabu: {r.tabu.inserted} inserted, {r.tabu.blocked} blocked, "
        f"{r.tabu.history} population states",
        f"Timings: ls {r.timings.ls:.1f}s, ga {r.timings.ga:.1f}s, "
        f"post {r.timings.post:.1f}s",
    ]
    if r.stage_best:
        stages = ", ".join(f"{k} {v}" for k, v in r.stage_best.items())
        lines.append(f"Best by stage: {stages}")
    if r.errors:
        lines.append(f"Errors: {len(r.errors)}")
        lines.extend(f"  - {e}" for e in r.errors)
    lines.append(f"Config: {r.config_hash}")
    return "\n".join(lines)


def format_bench_table(rows: list[BenchRow]) -> str:
    """Fixed-width table, one line per (instance, k)."""
    with_gap = any(row.oracle_weight is not None for row in rows)
    header = f"{'instance':<24} {'k':>4} {'best':>8} {'avg':>10}"
    if with_gap:
        header += f" {'oracle':>8} {'gap':>6}"
    lines = [header]
    for row in rows:
        line = f"{row.instance:<24} {row.k:>4} {row.best_weight:>8} {row.avg_weight:>10.1f}"
        if with_gap:
            oracle = "-" if row.oracle_weight is None else str(row.oracle_weight)
            gap = "-" if row.gap is None else str(row.gap)
            line += f" {oracle:>8} {gap:>6}"
        lines.append(line)
    return "\n".join(lines)


def format_comparison(counts: list[ComparisonCounts]) -> str:
    """N+ / N- per k: instances where the first result set is better / worse."""
    lines = [f"{'k':>4} {'N+best':>7} {'N-best':>7} {'N+avg':>7} {'N-avg':>7}"]
    for c in counts:
        lines.append(
            f"{c.k:>4} {c.plus_best:>7} {c.minus_best:>7} {c.plus_avg:>7} {c.minus_avg:>7}"
        )
    return "\n".join(lines)
