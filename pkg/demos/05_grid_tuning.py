"""Grid-search tuning on one benchmark cell.

Uses a reduced grid so the demo finishes in seconds; the default
``TuningGrid()`` reproduces the full search (4 inertia values, 4x4 learning
factors, 3x3 thresholds with inadmissible pairs skipped, 3 intervals).
"""

from vigpso import TuningGrid, tune

grid = TuningGrid(
    omega_values=(0.4, 0.6),
    c_values=(1.5, 2.0),
    tau1_values=(0.5, 0.7),
    tau2_values=(0.3,),
    interval_values=(5, 10),
    tuning_iterations=100,
    tuning_runs=3,
)

for algorithm in ("pso", "vigpso"):
    outcome = tune(grid, algorithm, "rastrigin", 10, seed=1)
    print(f"{algorithm}: scored {len(outcome.scores)} combinations")
    print(f"  best params: {outcome.best_params}")
    print(f"  best mean final value: {outcome.best_score:.5g}")
    ranked = sorted(outcome.scores, key=lambda item: item[1])[:3]
    for params, score in ranked:
        print(f"    {score:.5g}  {params}")
    print()

print("ties break toward the lexicographically smallest parameter tuple,")
print("so repeated tuning with the same seed always selects the same config.")
