"""Benchmark objective functions and their registry.

Eight classic continuous minimization benchmarks spanning separable,
partially separable, and non-separable interaction structure, all evaluated
on the box [-5, 5]^d with known optimum value 0. Indexing inside Sum
Squares, Dixon-Price, and Griewank is 1-based, matching the usual
definitions.

The raw evaluators are numba-compiled scalar loops; they are callable from
Python and from inside the engine iteration kernels. Use ``evaluate`` for
the validated entry point and ``make_objective`` to bind a function to a
search space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._kernels import maybe_njit
from .core import FloatArray, Objective, SearchSpace

LOWER = -5.0
UPPER = 5.0


@maybe_njit
def _sphere(x):
    s = 0.0
    for i in range(x.shape[0]):
        s += x[i] * x[i]
    return s


@maybe_njit
def _sum_squares(x):
    s = 0.0
    for i in range(x.shape[0]):
        s += (i + 1) * x[i] * x[i]
    return s


@maybe_njit
def _schwefel_2_22(x):
    s = 0.0
    p = 1.0
    for i in range(x.shape[0]):
        a = abs(x[i])
        s += a
        p *= a
    return s + p


@maybe_njit
def _dixon_price(x):
    s = (x[0] - 1.0) * (x[0] - 1.0)
    for i in range(1, x.shape[0]):
        t = 2.0 * x[i] * x[i] - x[i - 1]
        s += (i + 1) * t * t
    return s


@maybe_njit
def _rastrigin(x):
    n = x.shape[0]
    s = 10.0 * n
    for i in range(n):
        s += x[i] * x[i] - 10.0 * math.cos(2.0 * math.pi * x[i])
    return s


@maybe_njit
def _rosenbrock(x):
    s = 0.0
    for i in range(x.shape[0] - 1):
        a = x[i + 1] - x[i] * x[i]
        b = 1.0 - x[i]
        s += 100.0 * a * a + b * b
    return s


@maybe_njit
def _griewank(x):
    s = 0.0
    p = 1.0
    for i in range(x.shape[0]):
        s += x[i] * x[i] / 4000.0
        p *= math.cos(x[i] / math.sqrt(i + 1.0))
    return 1.0 + s - p


@maybe_njit
def _alpine(x):
    s = 0.0
    for i in range(x.shape[0]):
        s += abs(x[i] * math.sin(x[i]) + 0.1 * x[i])
    return s


def _origin(dim: int) -> FloatArray:
    return np.zeros(dim)


def _ones(dim: int) -> FloatArray:
    return np.ones(dim)


def _dixon_price_optimum(dim: int) -> FloatArray:
    # x_i = 2^(2^(1-i) - 1) for 1-based i; equals 1 at i=1 and tends to 1/2.
    i = np.arange(1, dim + 1, dtype=np.float64)
    return np.power(2.0, np.power(2.0, 1.0 - i) - 1.0)


@dataclass(frozen=True)
class BenchmarkSpec:
    """One registered benchmark: evaluator plus its metadata."""

    name: str
    separability_class: str  # separable | partially_separable | non_separable
    formula: str
    evaluate: Callable[[FloatArray], float]
    optimum_point: Callable[[int], FloatArray]
    known_optimum_value: float = 0.0
    lower: float = LOWER
    upper: float = UPPER

    def space(self, dim: int) -> SearchSpace:
        return SearchSpace(dim, self.lower, self.upper)


REGISTRY: dict[str, BenchmarkSpec] = {
    spec.name: spec
    for spec in (
        BenchmarkSpec(
            "sphere", "separable",
            "sum(x_i^2)", _sphere, _origin,
        ),
        BenchmarkSpec(
            "sum_squares", "separable",
            "sum(i * x_i^2)", _sum_squares, _origin,
        ),
        BenchmarkSpec(
            "schwefel_2_22", "separable",
            "sum(|x_i|) + prod(|x_i|)", _schwefel_2_22, _origin,
        ),
        BenchmarkSpec(
            "dixon_price", "partially_separable",
            "(x_1 - 1)^2 + sum_{i>=2}(i * (2x_i^2 - x_{i-1})^2)",
            _dixon_price, _dixon_price_optimum,
        ),
        BenchmarkSpec(
            "rastrigin", "partially_separable",
            "10n + sum(x_i^2 - 10cos(2pi x_i))", _rastrigin, _origin,
        ),
        BenchmarkSpec(
            "rosenbrock", "non_separable",
            "sum(100(x_{i+1} - x_i^2)^2 + (1 - x_i)^2)", _rosenbrock, _ones,
        ),
        BenchmarkSpec(
            "griewank", "non_separable",
            "1 + sum(x_i^2/4000) - prod(cos(x_i/sqrt(i)))", _griewank, _origin,
        ),
        BenchmarkSpec(
            "alpine", "non_separable",
            "sum(|x_i sin(x_i) + 0.1 x_i|)", _alpine, _origin,
        ),
    )
}


def names() -> list[str]:
    return list(REGISTRY)


def get(name: str) -> BenchmarkSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        known = ", ".join(REGISTRY)
        raise ValueError(f"unknown benchmark {name!r}; known: {known}") from None


def evaluate(name: str, x) -> float:
    """Validated evaluation of a named benchmark at point ``x``."""
    spec = get(name)
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("x must be a non-empty 1-d vector")
    if np.isnan(arr).any():
        raise ValueError("x contains NaN")
    return float(spec.evaluate(np.ascontiguousarray(arr)))


def make_objective(name: str, dim: int) -> Objective:
    """Bind a registered benchmark to a ``dim``-dimensional search space."""
    spec = get(name)
    return Objective(name=spec.name, space=spec.space(dim), evaluate=spec.evaluate)
