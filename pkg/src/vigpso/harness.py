"""Experiment orchestration: batch runs, comparison reports, grid tuning.

Runs are the unit of parallelism; set the ``VIGPSO_WORKERS`` environment
variable (default: available cores) or pass ``workers`` explicitly. Results
are merged and sorted deterministically, so the outcome is independent of
the degree of parallelism. Both engines see the same seed sequence
(``base_seed + run_index``), which keeps paired-seed analyses possible.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import benchmarks
from .core import RunResult
from .engine import VigpsoConfig, vigpso_run
from .pso import PsoConfig, pso_run
from .stats import MannWhitneyResult, SampleSummary, mann_whitney_u, summarize
from .vig import VigLearnConfig

WORKERS_ENV_VAR = "VIGPSO_WORKERS"
ALGORITHMS = ("pso", "vigpso")


def default_pso_config(max_iterations: int = 300) -> PsoConfig:
    """Moderate inertia with a stronger cognitive pull suits the baseline."""
    return PsoConfig(omega=0.6, c1=2.0, c2=1.5, swarm_size=50,
                     max_iterations=max_iterations, v_clamp=5.0)


def default_vigpso_config(max_iterations: int = 300) -> VigpsoConfig:
    """Low inertia with a stronger social pull suits the graph-guided engine."""
    return VigpsoConfig(
        base=PsoConfig(omega=0.4, c1=1.5, c2=2.0, swarm_size=50,
                       max_iterations=max_iterations, v_clamp=5.0),
        learn=VigLearnConfig(tau1=0.5, tau2=0.3, update_interval=10),
    )


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        if explicit < 1:
            raise ValueError(f"workers must be >= 1, got {explicit}")
        return explicit
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class ExperimentPlan:
    """A full cross of functions x dimensions x runs for both engines."""

    functions: list[str]
    dimensions: list[int]
    runs: int
    base_seed: int
    pso_config: PsoConfig
    vigpso_config: VigpsoConfig
    trace_stride: int = 1

    def __post_init__(self):
        if not self.functions or not self.dimensions:
            raise ValueError("plan needs at least one function and one dimension")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.trace_stride < 1:
            raise ValueError(f"trace_stride must be >= 1, got {self.trace_stride}")


def desk_scale_plans(
    functions: list[str] | None = None,
    dimensions: tuple[int, ...] = (10, 30, 50, 1000),
    base_seed: int = 0,
    pso_config: PsoConfig | None = None,
    vigpso_config: VigpsoConfig | None = None,
) -> list[ExperimentPlan]:
    """Default experiment plans: 100 runs per cell up to d=50.

    The 1000-dimensional cells default to 20 runs and a trace stride of 10
    to keep a full sweep tractable on one machine; raise ``runs`` on the
    returned plan for full fidelity.
    """
    functions = list(functions) if functions else benchmarks.names()
    pso_config = pso_config or default_pso_config()
    vigpso_config = vigpso_config or default_vigpso_config()
    low = [d for d in dimensions if d <= 50]
    high = [d for d in dimensions if d > 50]
    plans = []
    if low:
        plans.append(ExperimentPlan(functions, low, 100, base_seed,
                                    pso_config, vigpso_config, trace_stride=1))
    if high:
        plans.append(ExperimentPlan(functions, high, 20, base_seed,
                                    pso_config, vigpso_config, trace_stride=10))
    return plans


def _run_single(job) -> RunResult:
    algorithm, function, dim, seed, config, keep_graph = job
    objective = benchmarks.make_objective(function, dim)
    if algorithm == "pso":
        return pso_run(config, objective, seed)
    return vigpso_run(config, objective, seed, keep_graph=keep_graph)


def _execute(jobs: list, workers: int | None):
    count = worker_count(workers)
    if count <= 1 or len(jobs) <= 1:
        return [_run_single(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=count) as pool:
        chunk = max(1, len(jobs) // (4 * count))
        return list(pool.map(_run_single, jobs, chunksize=chunk))


def run_batch(
    plan: ExperimentPlan, workers: int | None = None, keep_graphs: bool = False
) -> list[RunResult]:
    """Execute the plan's full cross; results sorted by (algo, function, dim, seed)."""
    unknown = [f for f in plan.functions if f not in benchmarks.REGISTRY]
    if unknown:
        raise ValueError(f"unknown benchmark functions: {unknown}")
    jobs = []
    for function in plan.functions:
        for dim in plan.dimensions:
            for r in range(plan.runs):
                seed = plan.base_seed + r
                jobs.append(("pso", function, dim, seed, plan.pso_config, False))
                jobs.append(("vigpso", function, dim, seed, plan.vigpso_config, keep_graphs))
    results = _execute(jobs, workers)
    results.sort(key=lambda r: (r.algorithm, r.function, r.dim, r.seed))
    return results


@dataclass(frozen=True)
class ComparisonCell:
    function: str
    dim: int
    pso_summary: SampleSummary
    vigpso_summary: SampleSummary
    test: MannWhitneyResult
    winner: str  # "PSO" | "VIGPSO" | "--"


@dataclass
class ComparisonReport:
    cells: list[ComparisonCell]

    def cell(self, function: str, dim: int) -> ComparisonCell:
        for c in self.cells:
            if c.function == function and c.dim == dim:
                return c
        raise KeyError(f"no cell for ({function}, {dim})")


_WINNER_BY_LOWER = {"first": "PSO", "second": "VIGPSO", "none": "--"}


def compare(results: list[RunResult]) -> ComparisonReport:
    """Per-(function, dim) summaries and Mann-Whitney verdicts.

    The winner is the engine with the significantly lower median final
    value, or "--" when the test is not significant.
    """
    finals: dict = {}
    for r in results:
        finals.setdefault((r.function, r.dim), {}).setdefault(r.algorithm, []).append(
            r.final_value
        )
    cells = []
    for key in sorted(finals):
        by_algo = finals[key]
        missing = [a for a in ALGORITHMS if a not in by_algo]
        if missing:
            raise ValueError(f"cell {key} is missing results for: {missing}")
        for algo in ALGORITHMS:
            if len(by_algo[algo]) < 2:
                raise ValueError(f"cell {key} needs >= 2 runs per algorithm")
        test = mann_whitney_u(by_algo["pso"], by_algo["vigpso"])
        cells.append(ComparisonCell(
            function=key[0], dim=key[1],
            pso_summary=summarize(by_algo["pso"]),
            vigpso_summary=summarize(by_algo["vigpso"]),
            test=test,
            winner=_WINNER_BY_LOWER[test.lower_objective],
        ))
    return ComparisonReport(cells)


def format_report(report: ComparisonReport) -> str:
    """Fixed-width text table; p-values shown to five decimals."""
    header = (
        f"{'function':<14} {'dim':>5} {'pso mean':>12} {'pso std':>12} "
        f"{'vig mean':>12} {'vig std':>12} {'U':>8} {'p-value':>9} {'lower':>7}"
    )
    lines = [header, "-" * len(header)]
    for c in report.cells:
        lines.append(
            f"{c.function:<14} {c.dim:>5} {c.pso_summary.mean:>12.5g} "
            f"{c.pso_summary.std_dev:>12.5g} {c.vigpso_summary.mean:>12.5g} "
            f"{c.vigpso_summary.std_dev:>12.5g} {c.test.u_statistic:>8.1f} "
            f"{c.test.p_value:>9.5f} {c.winner:>7}"
        )
    return "\n".join(lines)


@dataclass(frozen=True)
class TuningGrid:
    """Search grid for per-configuration hyperparameter tuning.

    Threshold pairs with tau2 > tau1 are skipped. Every admissible
    combination is scored by the mean final value over ``tuning_runs``
    short runs of ``tuning_iterations`` iterations.
    """

    omega_values: tuple[float, ...] = (0.4, 0.5, 0.6, 0.8)
    c_values: tuple[float, ...] = (1.0, 1.5, 2.0, 2.5)
    tau1_values: tuple[float, ...] = (0.3, 0.5, 0.7)
    tau2_values: tuple[float, ...] = (0.3, 0.5, 0.7)
    interval_values: tuple[int, ...] = (5, 10, 15)
    tuning_iterations: int = 100
    tuning_runs: int = 5

    def __post_init__(self):
        for name in ("omega_values", "c_values", "tau1_values", "tau2_values",
                     "interval_values"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be non-empty")
        if self.tuning_iterations < 1 or self.tuning_runs < 1:
            raise ValueError("tuning_iterations and tuning_runs must be >= 1")

    def pso_combinations(self) -> list[dict]:
        return [
            {"omega": w, "c1": c1, "c2": c2}
            for w, c1, c2 in itertools.product(
                sorted(self.omega_values), sorted(self.c_values), sorted(self.c_values)
            )
        ]

    def vigpso_combinations(self) -> list[dict]:
        combos = []
        for w, c1, c2, t1, t2, k in itertools.product(
            sorted(self.omega_values), sorted(self.c_values), sorted(self.c_values),
            sorted(self.tau1_values), sorted(self.tau2_values),
            sorted(self.interval_values),
        ):
            if t2 > t1:
                continue
            combos.append({"omega": w, "c1": c1, "c2": c2,
                           "tau1": t1, "tau2": t2, "update_interval": k})
        return combos


@dataclass
class TuningResult:
    algorithm: str
    function: str
    dim: int
    best_params: dict
    best_config: PsoConfig | VigpsoConfig
    best_score: float
    scores: list[tuple[dict, float]]


def _build_config(algorithm: str, params: dict, iterations: int,
                  swarm_size: int, v_clamp: float):
    base = PsoConfig(omega=params["omega"], c1=params["c1"], c2=params["c2"],
                     swarm_size=swarm_size, max_iterations=iterations,
                     v_clamp=v_clamp)
    if algorithm == "pso":
        return base
    return VigpsoConfig(
        base=base,
        learn=VigLearnConfig(tau1=params["tau1"], tau2=params["tau2"],
                             update_interval=params["update_interval"]),
    )


def _score_combo(job) -> float:
    algorithm, function, dim, params, iterations, runs, seed, swarm_size, v_clamp = job
    config = _build_config(algorithm, params, iterations, swarm_size, v_clamp)
    objective = benchmarks.make_objective(function, dim)
    runner = pso_run if algorithm == "pso" else vigpso_run
    finals = [runner(config, objective, seed + r).final_value for r in range(runs)]
    return float(np.mean(finals))


def tune(
    grid: TuningGrid,
    algorithm: str,
    function: str,
    dim: int,
    seed: int,
    swarm_size: int = 50,
    v_clamp: float = 5.0,
    workers: int | None = None,
) -> TuningResult:
    """Grid-search the engine's hyperparameters on one (function, dim) cell.

    Every combination is scored with the same seed block, and the winner is
    the lowest mean final value; exact ties go to the lexicographically
    smallest (omega, c1, c2, tau1, tau2, update_interval).
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    benchmarks.get(function)
    combos = (grid.pso_combinations() if algorithm == "pso"
              else grid.vigpso_combinations())
    jobs = [
        (algorithm, function, dim, params, grid.tuning_iterations,
         grid.tuning_runs, seed, swarm_size, v_clamp)
        for params in combos
    ]
    count = worker_count(workers)
    if count <= 1:
        scores = [_score_combo(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=count) as pool:
            chunk = max(1, len(jobs) // (4 * count))
            scores = list(pool.map(_score_combo, jobs, chunksize=chunk))
    best_idx = 0
    for i, s in enumerate(scores):
        if s < scores[best_idx]:
            best_idx = i
    best_params = combos[best_idx]
    return TuningResult(
        algorithm=algorithm,
        function=function,
        dim=dim,
        best_params=best_params,
        best_config=_build_config(algorithm, best_params, grid.tuning_iterations,
                                  swarm_size, v_clamp),
        best_score=scores[best_idx],
        scores=list(zip(combos, scores)),
    )
