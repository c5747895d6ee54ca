"""Shared domain types: search spaces, objectives, seeded randomness, swarm state.

Both optimizer engines operate on the same ``SwarmState`` and draw their
randomness from a ``RngStream``, a thin wrapper around a counter-based
generator so that a seed fully determines a run's trajectory.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

import numpy as np
from numpy.typing import NDArray

if TYPE_CHECKING:
    from .vig import InteractionGraph

FloatArray = NDArray[np.float64]


@dataclass(frozen=True)
class SearchSpace:
    """A box-constrained continuous domain.

    ``lower`` and ``upper`` may be scalars (applied to every dimension) or
    length-``dim`` arrays of per-dimension bounds.
    """

    dim: int
    lower: FloatArray
    upper: FloatArray

    def __init__(self, dim: int, lower=-5.0, upper=5.0):
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        lo = np.broadcast_to(np.asarray(lower, dtype=np.float64), (dim,)).copy()
        hi = np.broadcast_to(np.asarray(upper, dtype=np.float64), (dim,)).copy()
        if not np.all(lo < hi):
            raise ValueError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def half_range(self) -> FloatArray:
        return 0.5 * (self.upper - self.lower)


@dataclass(frozen=True)
class Objective:
    """A named minimization target over a search space.

    ``evaluate`` must be a pure function of its input vector: deterministic
    and total on the box. Engines call it once per particle move, so it may
    be an ordinary Python callable or a numba-compiled function (compiled
    objectives unlock the fast iteration kernel).
    """

    name: str
    space: SearchSpace
    evaluate: Callable[[FloatArray], float]


class RngStream:
    """Deterministic random stream owned by a single run.

    Backed by the counter-based Philox generator, so the same seed yields the
    same draw sequence on every platform. Draw order is part of the engine
    contract: one iteration consumes ``uniform(0, 1, (S, d, 2))``, which is
    identical to drawing, for each particle in order and each dimension in
    order, r1 then r2.
    """

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {seed}")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.Philox(seed))

    def uniform(self, a: float, b: float, size=None):
        """Draw uniform values in [a, b); scalar when ``size`` is None."""
        if not np.all(np.asarray(a) < np.asarray(b)):
            raise ValueError(f"uniform requires a < b, got a={a}, b={b}")
        if size is None:
            return float(self._gen.uniform(a, b))
        return self._gen.uniform(a, b, size)


@dataclass(eq=False)
class SwarmState:
    """Mutable per-run swarm state; owned by exactly one engine loop.

    Invariants maintained by the engines: ``pbest_val[i]`` equals the
    objective at ``pbest_pos[i]``, ``gbest_val`` is the minimum personal
    best, positions stay inside the search box, and ``gbest_val`` never
    increases.
    """

    positions: FloatArray   # (S, d)
    velocities: FloatArray  # (S, d)
    pbest_pos: FloatArray   # (S, d)
    pbest_val: FloatArray   # (S,)
    gbest_pos: FloatArray   # (d,)
    gbest_val: float
    iteration: int = 0

    @property
    def swarm_size(self) -> int:
        return self.positions.shape[0]

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    def copy(self) -> "SwarmState":
        return SwarmState(
            positions=self.positions.copy(),
            velocities=self.velocities.copy(),
            pbest_pos=self.pbest_pos.copy(),
            pbest_val=self.pbest_val.copy(),
            gbest_pos=self.gbest_pos.copy(),
            gbest_val=self.gbest_val,
            iteration=self.iteration,
        )


def init_swarm(
    space: SearchSpace,
    swarm_size: int,
    rng: RngStream,
    objective: Objective,
    v_clamp: float | None = None,
) -> SwarmState:
    """Initialize a swarm: uniform positions, uniform velocities, bests set.

    Positions are uniform per dimension in [lower, upper); velocities are
    uniform in [-v_clamp, +v_clamp), with ``v_clamp`` defaulting to half the
    box range per dimension. Personal bests start at the initial positions
    and the global best is the best of those. Draw order: all positions
    first (particle-major), then all velocities.
    """
    if swarm_size < 2:
        raise ValueError(f"swarm_size must be >= 2, got {swarm_size}")
    d = space.dim
    positions = rng.uniform(space.lower, space.upper, size=(swarm_size, d))
    vc = space.half_range if v_clamp is None else np.broadcast_to(
        np.asarray(float(v_clamp)), (d,)
    )
    velocities = rng.uniform(-vc, vc, size=(swarm_size, d))
    pbest_pos = positions.copy()
    pbest_val = np.array([objective.evaluate(x) for x in positions], dtype=np.float64)
    best = int(np.argmin(pbest_val))
    return SwarmState(
        positions=positions,
        velocities=velocities,
        pbest_pos=pbest_pos,
        pbest_val=pbest_val,
        gbest_pos=pbest_pos[best].copy(),
        gbest_val=float(pbest_val[best]),
        iteration=0,
    )


@dataclass(eq=False)
class RunResult:
    """Outcome of one optimizer run.

    ``trace`` holds the global best value after initialization and after
    each iteration (length T+1). ``graph`` is the final interaction graph
    when the run was asked to keep it.
    """

    algorithm: str
    function: str
    dim: int
    seed: int
    trace: FloatArray
    final_value: float
    final_position: FloatArray
    wall_time_seconds: float
    graph: "InteractionGraph | None" = field(default=None, repr=False)


class _Timer:
    """Context manager measuring wall-clock seconds."""

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self._t0
        return False
