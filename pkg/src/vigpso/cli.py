"""Command-line interface.

Subcommands:
  bench    list benchmark functions with separability class, bounds, formula
  run      run one engine on one benchmark for N seeded runs, export data
  compare  run both engines across functions x dimensions and report verdicts
  tune     grid-search an engine's hyperparameters on one configuration
"""

from __future__ import annotations

import argparse
import os
import sys

from . import benchmarks, io
from .engine import vigpso_run
from .harness import (
    ExperimentPlan,
    TuningGrid,
    compare,
    default_pso_config,
    default_vigpso_config,
    format_report,
    run_batch,
    tune,
)
from .pso import pso_run
from .vig import export_graph_csv


def _add_workers(parser):
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel worker processes (default: VIGPSO_WORKERS or cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vigpso",
        description="PSO and graph-guided PSO engines with benchmarks, tuning, and comparison",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("bench", help="list benchmark functions")

    run_p = sub.add_parser("run", help="run one engine on one benchmark")
    run_p.add_argument("--algo", choices=("pso", "vigpso"), required=True)
    run_p.add_argument("--function", required=True)
    run_p.add_argument("--dim", type=int, required=True)
    run_p.add_argument("--runs", type=int, default=1)
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--config", help="flat key = value config file")
    run_p.add_argument("--iterations", type=int, default=None,
                       help="override max_iterations")
    run_p.add_argument("--out", help="output base path for traces/finals files")
    run_p.add_argument("--format", choices=("csv", "json"), default="csv")
    run_p.add_argument("--trace-stride", type=int, default=1)
    run_p.add_argument("--export-graph", action="store_true",
                       help="also write each run's final interaction graph edges")

    cmp_p = sub.add_parser("compare", help="compare both engines")
    cmp_p.add_argument("--functions", required=True,
                       help="comma-separated benchmark names")
    cmp_p.add_argument("--dims", required=True, help="comma-separated dimensions")
    cmp_p.add_argument("--runs", type=int, required=True)
    cmp_p.add_argument("--seed", type=int, default=0)
    cmp_p.add_argument("--pso-config")
    cmp_p.add_argument("--vigpso-config")
    cmp_p.add_argument("--iterations", type=int, default=None)
    cmp_p.add_argument("--out", required=True, help="report output path (.csv or .json)")
    cmp_p.add_argument("--trace-stride", type=int, default=1)
    _add_workers(cmp_p)

    tune_p = sub.add_parser("tune", help="grid-search hyperparameters")
    tune_p.add_argument("--algo", choices=("pso", "vigpso"), required=True)
    tune_p.add_argument("--function", required=True)
    tune_p.add_argument("--dim", type=int, required=True)
    tune_p.add_argument("--seed", type=int, default=0)
    tune_p.add_argument("--grid", help="grid file overriding the default search grid")
    tune_p.add_argument("--out", required=True,
                        help="score table output path (.csv or .json)")
    _add_workers(tune_p)

    return parser


def _cmd_bench(_args) -> int:
    header = f"{'name':<16} {'class':<22} {'bounds':<12} formula"
    print(header)
    print("-" * len(header))
    for name in benchmarks.names():
        spec = benchmarks.get(name)
        bounds = f"[{spec.lower:g}, {spec.upper:g}]"
        print(f"{spec.name:<16} {spec.separability_class:<22} {bounds:<12} {spec.formula}")
    return 0


def _load_engine_config(args):
    values = io.read_config_file(args.config) if args.config else {}
    if args.iterations:  # explicit flag beats the config file
        values["max_iterations"] = args.iterations
        iterations = args.iterations
    else:
        iterations = int(values.get("max_iterations", 300))
    if args.algo == "pso":
        extraneous = set(values) - set(io.CONFIG_KEYS[:6])
        if extraneous:
            print(f"note: ignoring graph-engine keys for pso: {sorted(extraneous)}",
                  file=sys.stderr)
        config = io.pso_config_from_values(values, default_pso_config(iterations))
        return config, pso_run
    config = io.vigpso_config_from_values(values, default_vigpso_config(iterations))
    return config, vigpso_run


def _cmd_run(args) -> int:
    benchmarks.get(args.function)
    config, runner = _load_engine_config(args)
    objective = benchmarks.make_objective(args.function, args.dim)
    keep_graph = args.export_graph and args.algo == "vigpso"
    results = []
    for r in range(args.runs):
        seed = args.seed + r
        if keep_graph:
            result = runner(config, objective, seed, keep_graph=True)
        else:
            result = runner(config, objective, seed)
        results.append(result)
        print(f"{args.algo} {args.function} d={args.dim} seed={seed}: "
              f"final={result.final_value:.6g} ({result.wall_time_seconds:.2f}s)")
    if args.out:
        traces_path, finals_path = io.export_results(
            results, args.out, args.format, args.trace_stride
        )
        print(f"wrote {traces_path} and {finals_path}")
        if keep_graph:
            stem, _ = os.path.splitext(args.out)
            for result in results:
                graph_path = f"{stem}_graph_seed{result.seed}.csv"
                export_graph_csv(result.graph, graph_path)
                print(f"wrote {graph_path}")
    return 0


def _cmd_compare(args) -> int:
    functions = [f.strip() for f in args.functions.split(",") if f.strip()]
    dims = [int(d) for d in args.dims.split(",")]
    iterations = args.iterations or 300
    pso_values = io.read_config_file(args.pso_config) if args.pso_config else {}
    vig_values = io.read_config_file(args.vigpso_config) if args.vigpso_config else {}
    plan = ExperimentPlan(
        functions=functions,
        dimensions=dims,
        runs=args.runs,
        base_seed=args.seed,
        pso_config=io.pso_config_from_values(pso_values, default_pso_config(iterations)),
        vigpso_config=io.vigpso_config_from_values(vig_values,
                                                   default_vigpso_config(iterations)),
        trace_stride=args.trace_stride,
    )
    results = run_batch(plan, workers=args.workers)
    report = compare(results)
    print(format_report(report))
    fmt = "json" if str(args.out).endswith(".json") else "csv"
    path = io.export_report(report, args.out, fmt)
    print(f"wrote {path}")
    return 0


def _cmd_tune(args) -> int:
    grid = io.read_grid_file(args.grid) if args.grid else TuningGrid()
    outcome = tune(grid, args.algo, args.function, args.dim, args.seed,
                   workers=args.workers)
    print(f"best {args.algo} config for {args.function} d={args.dim}: "
          f"{outcome.best_params} (mean final {outcome.best_score:.6g})")
    fmt = "json" if str(args.out).endswith(".json") else "csv"
    param_keys = list(outcome.scores[0][0].keys())
    rows = [dict(params, mean_final=score) for params, score in outcome.scores]
    io._write_rows(rows, param_keys + ["mean_final"], args.out, fmt)
    print(f"wrote {args.out}")
    stem, _ = os.path.splitext(args.out)
    best_path = f"{stem}_best.conf"
    if args.algo == "pso":
        io.write_config_file(io.pso_config_values(outcome.best_config), best_path)
    else:
        io.write_config_file(io.vigpso_config_values(outcome.best_config), best_path)
    print(f"wrote {best_path}")
    return 0


_COMMANDS = {
    "bench": _cmd_bench,
    "run": _cmd_run,
    "compare": _cmd_compare,
    "tune": _cmd_tune,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
