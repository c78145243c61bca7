"""CLI entry point for the diversified top-k clique solver."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any

import yaml

from engine.config.defaults import random_suite
from engine.config.loader import (
    get_config_value,
    load_bench_spec,
    load_config,
    save_config,
    set_config_value,
    with_overrides,
)
from engine.config.schema import BudgetMode, GraphFormat, SolverConfig, StartBias, WeightScheme
from engine.graph.generators import gen_ba, gen_er
from engine.graph.loader import load_graph, save_graph
from engine.oracle.exact import exact_solve
from engine.pipeline.benchmark import compare_rows, run_benchmark
from engine.pipeline.solve_pipeline import solve
from engine.reporting.formatters import format_bench_table, format_comparison, format_result_json
from engine.reporting.report import emit_report, emit_scatter, load_summary

DEFAULT_CONFIG = "ops/configs/default.yaml"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="diverteam",
        description="Diversified top-k (weighted) clique search",
    )
    parser.add_argument("--config", default=DEFAULT_CONFIG, help="Solver config YAML path")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")

    sub = parser.add_subparsers(dest="command")

    # solve
    solve_p = sub.add_parser("solve", help="Solve one instance")
    solve_p.add_argument("--input", required=True, help="Graph file")
    _add_graph_args(solve_p)
    solve_p.add_argument("--k", type=int, help="Clique budget")
    solve_p.add_argument("--time", type=float, help="Time budget in seconds")
    solve_p.add_argument("--seed", type=int)
    solve_p.add_argument("--mstep", type=int, help="Non-improving LS steps before stopping")
    solve_p.add_argument("--bms", type=int, help="BMS sample size")
    solve_p.add_argument("--start-bias", choices=[b.value for b in StartBias])
    solve_p.add_argument("--tabu-bits", type=int, help="Tabu bit-vector length L")
    solve_p.add_argument("--no-reduction", action="store_true")
    solve_p.add_argument("--no-tabu", action="store_true")
    solve_p.add_argument("--no-ga", action="store_true")
    solve_p.add_argument("--no-post", action="store_true")
    solve_p.add_argument(
        "--deterministic", metavar="LS_COUNT:GA_GENS",
        help="Count-based stopping instead of wall-clock",
    )
    solve_p.add_argument("--check-invariants", action="store_true")
    solve_p.add_argument("--out", help="Result JSON path (stdout when omitted)")

    # gen er | ba | suite
    gen_p = sub.add_parser("gen", help="Generate random instances")
    gen_sub = gen_p.add_subparsers(dest="gen_command")
    er_p = gen_sub.add_parser("er", help="Erdos-Renyi G(n, p)")
    er_p.add_argument("--n", type=int, required=True)
    er_p.add_argument("--p", type=float, required=True)
    er_p.add_argument("--seed", type=int, default=0)
    er_p.add_argument("--out", required=True)
    ba_p = gen_sub.add_parser("ba", help="Barabasi-Albert preferential attachment")
    ba_p.add_argument("--n", type=int, required=True)
    ba_p.add_argument("--m", type=int, required=True)
    ba_p.add_argument("--seed", type=int, default=0)
    ba_p.add_argument("--out", required=True)
    suite_p = gen_sub.add_parser("suite", help="Whole ER/BA benchmark grid plus a bench spec")
    suite_p.add_argument("--out", required=True, help="Output directory")
    suite_p.add_argument("--scale", type=float, default=1.0, help="Vertex count multiplier")
    suite_p.add_argument("--seed", type=int, default=0)

    # oracle
    oracle_p = sub.add_parser("oracle", help="Exact optimum for a tiny instance")
    oracle_p.add_argument("--input", required=True)
    _add_graph_args(oracle_p)
    oracle_p.add_argument("--k", type=int, required=True)

    # bench
    bench_p = sub.add_parser("bench", help="Run a benchmark spec")
    bench_p.add_argument("--spec", required=True, help="Benchmark spec YAML")
    bench_p.add_argument("--runs", type=int, help="Seeds per (instance, k)")
    bench_p.add_argument("--oracle", action="store_true", help="Add exact optimum and gap")
    bench_p.add_argument("--out", required=True, help="Output directory")

    # compare
    cmp_p = sub.add_parser("compare", help="N+/N- counts between two summary CSVs")
    cmp_p.add_argument("--self", dest="own", required=True, help="Summary CSV of this solver")
    cmp_p.add_argument("--other", required=True, help="Summary CSV to compare against")
    cmp_p.add_argument("--out", required=True, help="Directory for scatter.csv")

    # config show / config set
    config_p = sub.add_parser("config", help="Config operations")
    config_sub = config_p.add_subparsers(dest="config_command")
    config_sub.add_parser("show", help="Display current config")
    set_p = config_sub.add_parser("set", help="Set a config value and save it to --config")
    set_p.add_argument("keyvalue", help="key=value to set")

    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = _load_base_config(args.config)
        if args.command == "solve":
            return _cmd_solve(config, args)
        elif args.command == "gen":
            return _cmd_gen(args)
        elif args.command == "oracle":
            return _cmd_oracle(config, args)
        elif args.command == "bench":
            return _cmd_bench(args)
        elif args.command == "compare":
            return _cmd_compare(args)
        elif args.command == "config":
            return _cmd_config(config, args)
        else:
            parser.print_help()
            return EXIT_ERROR
    except (ValueError, KeyError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_ERROR


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=[f.value for f in GraphFormat])
    p.add_argument("--weights", choices=[w.value for w in WeightScheme])


def _load_base_config(path: str) -> SolverConfig:
    if Path(path).exists():
        return load_config(path)
    logger.debug("No config at %s, using defaults", path)
    return SolverConfig()


def _parse_deterministic(value: str) -> tuple[int, int]:
    ls_count, sep, ga_gens = value.partition(":")
    if not sep:
        raise ValueError(f"--deterministic expects LS_COUNT:GA_GENS, got {value!r}")
    return int(ls_count), int(ga_gens)


def _solve_overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {
        "k": args.k,
        "seed": args.seed,
        "budget.t_max": args.time,
        "local_search.m_step": args.mstep,
        "local_search.bms_samples": args.bms,
        "local_search.start_bias": args.start_bias,
        "tabu.bits": args.tabu_bits,
        "graph.weights": args.weights,
    }
    if args.no_reduction:
        overrides["ablation.reduction"] = False
    if args.no_tabu:
        overrides["tabu.enabled"] = False
    if args.no_ga:
        overrides["ablation.genetic"] = False
    if args.no_post:
        overrides["ablation.postprocess"] = False
    if args.check_invariants:
        overrides["check_invariants"] = True
    if args.deterministic:
        ls_count, ga_gens = _parse_deterministic(args.deterministic)
        overrides["budget.mode"] = BudgetMode.DETERMINISTIC.value
        overrides["budget.ls_individuals"] = ls_count
        overrides["budget.ga_generations"] = ga_gens
    return overrides


def _cmd_solve(config: SolverConfig, args: argparse.Namespace) -> int:
    config = with_overrides(config, _solve_overrides(args))
    fmt = GraphFormat(args.format or GraphFormat.DIMACS)
    g = load_graph(args.input, fmt, config.graph.weights, config.graph.dense_threshold)
    result = solve(g, config)

    text = format_result_json(result)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n")
        print(f"W={result.best_weight} valid={result.valid} -> {out}")
    else:
        print(text)
    if not result.valid:
        for e in result.errors:
            print(f"Verification failed: {e}")
        return EXIT_INVALID
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.gen_command == "er":
        path = save_graph(gen_er(args.n, args.p, args.seed), args.out)
    elif args.gen_command == "ba":
        path = save_graph(gen_ba(args.n, args.m, args.seed), args.out)
    elif args.gen_command == "suite":
        return _gen_suite(Path(args.out), args.scale, args.seed)
    else:
        print("Use: gen er | gen ba | gen suite")
        return EXIT_ERROR
    print(f"Wrote {path}")
    return EXIT_OK


def _gen_suite(out: Path, scale: float, seed: int) -> int:
    out.mkdir(parents=True, exist_ok=True)
    instances = []
    for spec in random_suite(scale):
        if spec.model == "er":
            g = gen_er(spec.n, spec.p, seed)
        else:
            g = gen_ba(spec.n, spec.m, seed)
        filename = f"{spec.name}.clq"
        save_graph(g, out / filename)
        instances.append({"path": filename, "format": GraphFormat.DIMACS.value, "name": spec.name})
        logger.info("Generated %s (n=%d, m=%d)", spec.name, g.n, g.edge_count)

    spec_path = out / "bench.yaml"
    with open(spec_path, "w") as f:
        yaml.safe_dump({"instances": instances}, f, sort_keys=False)
    print(f"Wrote {len(instances)} instances and {spec_path}")
    return EXIT_OK


def _cmd_oracle(config: SolverConfig, args: argparse.Namespace) -> int:
    weights = WeightScheme(args.weights) if args.weights else config.graph.weights
    fmt = GraphFormat(args.format or GraphFormat.DIMACS)
    g = load_graph(args.input, fmt, weights, config.graph.dense_threshold)
    best_w, witness = exact_solve(g, args.k)
    print(json.dumps({
        "instance": g.name,
        "k": args.k,
        "bestW": best_w,
        "cliques": [list(c) for c in witness.cliques],
    }, indent=2))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    spec = load_bench_spec(args.spec)
    report = run_benchmark(spec, runs=args.runs, with_oracle=args.oracle or None)
    emit_report(args.out, report.results, report.rows)
    print(format_bench_table(report.rows))
    if report.skipped:
        print(f"Skipped {len(report.skipped)} unreadable instances")
    if not report.results:
        print("Error: no instance could be solved")
        return EXIT_ERROR
    invalid = [r for r in report.results if not r.valid]
    if invalid:
        print(f"{len(invalid)} results failed verification")
        return EXIT_INVALID
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    counts, points = compare_rows(load_summary(args.own), load_summary(args.other))
    path = emit_scatter(args.out, points)
    print(format_comparison(counts))
    print(f"Wrote {len(points)} scatter points to {path}")
    return EXIT_OK


def _cmd_config(config: SolverConfig, args: argparse.Namespace) -> int:
    if args.config_command == "show":
        print(config.model_dump_json(indent=2))
        return EXIT_OK
    elif args.config_command == "set":
        kv = args.keyvalue
        if "=" not in kv:
            print("Error: use key=value format")
            return EXIT_ERROR
        key, value = kv.split("=", 1)
        new_config = set_config_value(config, key.strip(), value.strip())
        save_config(new_config, args.config)
        print(f"Set {key.strip()} = {get_config_value(new_config, key.strip())}")
        return EXIT_OK
    else:
        print("Use: config show | config set key=value")
        return EXIT_ERROR
