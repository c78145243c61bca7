"""Tests for the benchmark harness and result-set comparison."""

from pathlib import Path

from engine.config.schema import BenchSpec, InstanceSpec
from engine.models.benchmark import BenchRow
from engine.pipeline.benchmark import compare_rows, run_benchmark
from engine.tests.conftest import det_config


def _spec(*paths: Path, k_values: list[int], runs: int = 1, **kwargs: object) -> BenchSpec:
    return BenchSpec(
        instances=[InstanceSpec(path=str(p)) for p in paths],
        k_values=k_values,
        runs=runs,
        solver=det_config(),
        **kwargs,
    )


def _row(instance: str, k: int, best: int, avg: float) -> BenchRow:
    return BenchRow(
        instance=instance, k=k, seeds=(0,), best_weight=best, avg_weight=avg, best_seed=0
    )


class TestRunBenchmark:
    def test_single_run_row(self, petersen_path: Path):
        report = run_benchmark(_spec(petersen_path, k_values=[1]))
        assert len(report.results) == 1
        assert len(report.rows) == 1
        row = report.rows[0]
        assert row.instance == "petersen"
        assert row.k == 1
        # Petersen is triangle-free, so one clique is one edge.
        assert row.best_weight == 2
        assert row.avg_weight == row.best_weight
        assert row.oracle_weight is None
        assert row.relative is None

    def test_seeds_and_results_per_k(self, petersen_path: Path):
        report = run_benchmark(_spec(petersen_path, k_values=[1, 2], runs=3, base_seed=5))
        assert len(report.results) == 6
        assert [r.k for r in report.rows] == [1, 2]
        for row in report.rows:
            assert row.seeds == (5, 6, 7)
            assert row.best_seed in row.seeds
            assert row.avg_weight <= row.best_weight
        assert all(r.valid for r in report.results)

    def test_runs_override(self, petersen_path: Path):
        report = run_benchmark(_spec(petersen_path, k_values=[1], runs=4), runs=2)
        assert report.rows[0].seeds == (0, 1)

    def test_unreadable_instance_skipped(self, tmp_path: Path, petersen_path: Path):
        broken = tmp_path / "broken.clq"
        broken.write_text("p edge 3 1\ne 1 9\n")
        missing = tmp_path / "missing.clq"
        report = run_benchmark(_spec(broken, missing, petersen_path, k_values=[1]))
        assert report.skipped == [str(broken), str(missing)]
        assert [r.instance for r in report.rows] == ["petersen"]

    def test_instance_name_applied(self, petersen_path: Path):
        spec = BenchSpec(
            instances=[InstanceSpec(path=str(petersen_path), name="pet")],
            k_values=[1],
            runs=1,
            solver=det_config(),
        )
        report = run_benchmark(spec)
        assert report.rows[0].instance == "pet"
        assert report.results[0].instance == "pet"

    def test_oracle_gap(self, petersen_path: Path):
        report = run_benchmark(_spec(petersen_path, k_values=[1, 2]), with_oracle=True)
        oracle = {row.k: row.oracle_weight for row in report.rows}
        assert oracle == {1: 2, 2: 4}
        for row in report.rows:
            assert row.gap is not None and row.gap >= 0
            assert row.relative is not None and 0 < row.relative <= 1


class TestCompareRows:
    def test_self_comparison_is_neutral(self):
        rows = [_row("a", 10, 50, 48.0), _row("b", 10, 60, 60.0), _row("a", 20, 70, 69.5)]
        counts, points = compare_rows(rows, rows)
        assert [c.k for c in counts] == [10, 20]
        for c in counts:
            assert (c.plus_best, c.minus_best, c.plus_avg, c.minus_avg) == (0, 0, 0, 0)
        assert points == []

    def test_counts_and_points(self):
        own = [_row("a", 10, 50, 48.0), _row("b", 10, 60, 55.0), _row("c", 10, 40, 40.0)]
        other = [_row("a", 10, 45, 49.0), _row("b", 10, 62, 50.0), _row("c", 10, 40, 40.0)]
        counts, points = compare_rows(own, other)
        assert len(counts) == 1
        c = counts[0]
        assert (c.plus_best, c.minus_best) == (1, 1)
        assert (c.plus_avg, c.minus_avg) == (1, 1)
        assert [(p.instance, p.self_best, p.other_best) for p in points] == [
            ("a", 50, 45),
            ("b", 60, 62),
        ]
        assert points[0].relative == 45 / 50

    def test_unmatched_pairs_ignored(self):
        own = [_row("a", 10, 50, 50.0), _row("only-own", 10, 9, 9.0)]
        other = [_row("a", 10, 40, 40.0), _row("a", 20, 99, 99.0)]
        counts, points = compare_rows(own, other)
        assert [c.k for c in counts] == [10]
        assert counts[0].plus_best == 1
        assert len(points) == 1
