"""Benchmark report files: results JSON, summary CSV and comparison scatter CSV."""

import json
import logging
from pathlib import Path

import pandas as pd

from engine.models.benchmark import BenchRow, ScatterPoint
from engine.models.result import SolveResult
from engine.reporting.formatters import result_to_dict

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["instance", "k", "seed", "bestW", "avgW", "relative", "oracleW", "gap"]
SCATTER_COLUMNS = ["instance", "k", "selfBest", "otherBest", "relative"]

RESULTS_FILE = "results.json"
SUMMARY_FILE = "summary.csv"
SCATTER_FILE = "scatter.csv"


def _summary_record(row: BenchRow) -> dict[str, object]:
    return {
        "instance": row.instance,
        "k": row.k,
        "seed": row.best_seed,
        "bestW": row.best_weight,
        "avgW": row.avg_weight,
        "relative": row.relative,
        "oracleW": row.oracle_weight,
        "gap": row.gap,
    }


def emit_report(
    out_dir: str | Path, results: list[SolveResult], rows: list[BenchRow]
) -> list[Path]:
    """Write every run to results.json and one row per (instance, k) to summary.csv.

    ``seed`` is the seed that reached the best W; ``relative`` is best / oracle
    and stays empty without an oracle.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    results_path = out / RESULTS_FILE
    results_path.write_text(json.dumps([result_to_dict(r) for r in results], indent=2))

    summary_path = out / SUMMARY_FILE
    df = pd.DataFrame([_summary_record(r) for r in rows], columns=SUMMARY_COLUMNS)
    df.to_csv(summary_path, index=False)

    logger.info("Wrote %d results and %d summary rows to %s", len(results), len(rows), out)
    return [results_path, summary_path]


def emit_scatter(out_dir: str | Path, points: list[ScatterPoint]) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / SCATTER_FILE
    records = [
        {
            "instance": p.instance,
            "k": p.k,
            "selfBest": p.self_best,
            "otherBest": p.other_best,
            "relative": p.relative,
        }
        for p in points
    ]
    pd.DataFrame(records, columns=SCATTER_COLUMNS).to_csv(path, index=False)
    return path


def load_summary(path: str | Path) -> list[BenchRow]:
    """Read a summary.csv back into rows (only the best seed survives the round trip)."""
    df = pd.read_csv(path)
    missing = [c for c in ("instance", "k", "seed", "bestW", "avgW") if c not in df.columns]
    if missing:
        raise ValueError(f"{path}: missing columns {missing}")
    rows = []
    for rec in df.to_dict("records"):
        oracle = rec.get("oracleW")
        rows.append(
            BenchRow(
                instance=str(rec["instance"]),
                k=int(rec["k"]),
                seeds=(int(rec["seed"]),),
                best_weight=int(rec["bestW"]),
                avg_weight=float(rec["avgW"]),
                best_seed=int(rec["seed"]),
                oracle_weight=None if oracle is None or pd.isna(oracle) else int(oracle),
            )
        )
    return rows
