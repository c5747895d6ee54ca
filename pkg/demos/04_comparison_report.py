"""A small statistical comparison of the two engines.

Runs both engines over a few benchmark cells with paired seeds, prints the
Mann-Whitney verdict table, and exports the underlying data.
"""

from vigpso import (
    ExperimentPlan,
    compare,
    default_pso_config,
    default_vigpso_config,
    export_report,
    export_results,
    format_report,
    run_batch,
)

plan = ExperimentPlan(
    functions=["sphere", "rastrigin", "rosenbrock"],
    dimensions=[10, 30],
    runs=15,
    base_seed=100,
    pso_config=default_pso_config(150),
    vigpso_config=default_vigpso_config(150),
    trace_stride=10,
)

results = run_batch(plan)
print(f"executed {len(results)} runs "
      f"({plan.runs} per engine per cell, seeds {plan.base_seed}..."
      f"{plan.base_seed + plan.runs - 1})")

report = compare(results)
print()
print(format_report(report))

traces_path, finals_path = export_results(results, "demo_comparison.csv",
                                          trace_stride=plan.trace_stride)
report_path = export_report(report, "demo_comparison_report.csv")
print(f"\nwrote {traces_path}, {finals_path}, {report_path}")
