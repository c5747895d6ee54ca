"""Continuous optimization with PSO and graph-guided PSO.

Two engines over one shared swarm core: a standard global-best particle
swarm baseline, and a variant that learns a variable interaction graph from
movement correlations and blends neighbor-dimension velocities into each
update. Ships with a benchmark suite, a grid-search tuner, Mann-Whitney
comparison machinery, and batch/export tooling.
"""

from . import benchmarks
from .core import (
    Objective,
    RngStream,
    RunResult,
    SearchSpace,
    SwarmState,
    init_swarm,
)
from .engine import (
    VigpsoConfig,
    alpha_schedule,
    blend_velocity,
    inertia_schedule,
    vigpso_run,
    vigpso_step,
)
from .harness import (
    ComparisonCell,
    ComparisonReport,
    ExperimentPlan,
    TuningGrid,
    TuningResult,
    compare,
    default_pso_config,
    default_vigpso_config,
    desk_scale_plans,
    format_report,
    run_batch,
    tune,
)
from .io import (
    export_report,
    export_results,
    load_finals,
    load_report,
    load_traces,
    read_config_file,
    read_grid_file,
)
from .pso import PsoConfig, pso_run, pso_step
from .stats import MannWhitneyResult, SampleSummary, mann_whitney_u, summarize
from .vig import (
    InteractionGraph,
    VigLearnConfig,
    export_graph_csv,
    neighbors,
    pearson,
    update_graph,
)

__version__ = "0.1.0"

__all__ = [
    "benchmarks",
    "Objective", "RngStream", "RunResult", "SearchSpace", "SwarmState", "init_swarm",
    "PsoConfig", "pso_run", "pso_step",
    "VigpsoConfig", "alpha_schedule", "inertia_schedule", "blend_velocity",
    "vigpso_run", "vigpso_step",
    "InteractionGraph", "VigLearnConfig", "pearson", "update_graph", "neighbors",
    "export_graph_csv",
    "MannWhitneyResult", "SampleSummary", "mann_whitney_u", "summarize",
    "ExperimentPlan", "TuningGrid", "TuningResult", "ComparisonCell",
    "ComparisonReport", "compare", "run_batch", "tune", "format_report",
    "default_pso_config", "default_vigpso_config", "desk_scale_plans",
    "export_results", "export_report", "load_traces", "load_finals", "load_report",
    "read_config_file", "read_grid_file",
]
