"""Standard global-best particle swarm optimizer, the baseline engine.

Velocity update per particle i and dimension j:

    v = omega * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)

with fixed inertia, r1 and r2 drawn uniformly from [0, 1) per particle and
dimension, velocities clipped to +/- v_clamp, and positions clamped to the
search box. Personal and global bests update asynchronously inside the
particle loop, so later particles see earlier improvements immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import Objective, RngStream, RunResult, SwarmState, _Timer, init_swarm


@dataclass(frozen=True)
class PsoConfig:
    """Hyperparameters of the baseline engine."""

    omega: float
    c1: float
    c2: float
    swarm_size: int = 50
    max_iterations: int = 300
    v_clamp: float = 5.0

    def __post_init__(self):
        if not 0.0 < self.omega <= 1.0:
            raise ValueError(f"omega must be in (0, 1], got {self.omega}")
        if self.c1 <= 0.0 or self.c2 <= 0.0:
            raise ValueError(f"c1 and c2 must be positive, got {self.c1}, {self.c2}")
        if self.swarm_size < 2:
            raise ValueError(f"swarm_size must be >= 2, got {self.swarm_size}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.v_clamp <= 0.0:
            raise ValueError(f"v_clamp must be positive, got {self.v_clamp}")


def pso_step(
    state: SwarmState, config: PsoConfig, objective: Objective, rng: RngStream
) -> SwarmState:
    """Advance the swarm by one iteration in place; returns the same state."""
    if state.iteration >= config.max_iterations:
        raise ValueError(
            f"iteration {state.iteration} already at max_iterations {config.max_iterations}"
        )
    draws = rng.uniform(0.0, 1.0, size=(state.swarm_size, state.dim, 2))
    _kernels.run_iteration(
        state, draws, config.omega, config.c1, config.c2, config.v_clamp,
        objective.space.lower, objective.space.upper, objective.evaluate,
    )
    state.iteration += 1
    return state


def pso_run(config: PsoConfig, objective: Objective, seed: int) -> RunResult:
    """Run the baseline engine from a fresh seeded swarm."""
    rng = RngStream(seed)
    with _Timer() as timer:
        state = init_swarm(
            objective.space, config.swarm_size, rng, objective, config.v_clamp
        )
        trace = np.empty(config.max_iterations + 1)
        trace[0] = state.gbest_val
        for t in range(config.max_iterations):
            pso_step(state, config, objective, rng)
            trace[t + 1] = state.gbest_val
    return RunResult(
        algorithm="pso",
        function=objective.name,
        dim=objective.space.dim,
        seed=seed,
        trace=trace,
        final_value=float(trace[-1]),
        final_position=state.gbest_pos.copy(),
        wall_time_seconds=timer.elapsed,
    )
