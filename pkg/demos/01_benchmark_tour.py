"""Tour of the benchmark suite.

Lists every registered function with its interaction class, checks the
known optima, and shows a few hand-verifiable evaluations.
"""

import numpy as np

from vigpso import benchmarks

print("Registered benchmarks")
print(f"{'name':<16} {'class':<22} {'bounds':<10} formula")
for name in benchmarks.names():
    spec = benchmarks.get(name)
    print(f"{spec.name:<16} {spec.separability_class:<22} "
          f"[{spec.lower:g}, {spec.upper:g}]  {spec.formula}")

# Every function has optimum value 0; the optimum point is the origin except
# for rosenbrock (all ones) and dixon_price (a closed-form power sequence).
print("\nValues at the known optima (d = 12)")
for name in benchmarks.names():
    spec = benchmarks.get(name)
    point = spec.optimum_point(12)
    print(f"{name:<16} f(x*) = {benchmarks.evaluate(name, point):.3e}")

print("\nHand-checkable evaluations")
print("sphere([1, 2, 3])        =", benchmarks.evaluate("sphere", [1, 2, 3]))
print("sum_squares([1, 2, 3])   =", benchmarks.evaluate("sum_squares", [1, 2, 3]))
print("schwefel_2_22([1,-2,3])  =", benchmarks.evaluate("schwefel_2_22", [1, -2, 3]))
print("dixon_price([1, 1])      =", benchmarks.evaluate("dixon_price", [1, 1]))

# Random points stay non-negative everywhere on the box.
rng = np.random.default_rng(0)
worst = min(
    benchmarks.evaluate(name, rng.uniform(-5, 5, size=20))
    for name in benchmarks.names()
    for _ in range(200)
)
print(f"\nSmallest value over 1600 random box points: {worst:.4g} (never negative)")
