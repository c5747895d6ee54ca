"""The graph-guided engine: decaying inertia, blended velocities, learning.

Each iteration first computes the standard velocity update for every
dimension of a particle (with an inertia weight that decays over the run),
then blends in a weighted average of the particle's own standard velocities
over dimensions connected in the interaction graph:

    v'_d = (1 - alpha) * v_std_d + alpha * v_vig_d
    v_vig_d = sum_n(w_n * v_std_n) / sum_n(w_n)   over neighbors n of d

The blend weight alpha rises from 0 toward a cap as the run progresses, so
early iterations explore like plain PSO and later ones lean on the learned
structure. Every ``update_interval`` iterations the graph is re-learned from
that iteration's particle movements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import Objective, RngStream, RunResult, SwarmState, _Timer, init_swarm
from .pso import PsoConfig
from .vig import InteractionGraph, VigLearnConfig, update_graph


@dataclass(frozen=True)
class VigpsoConfig:
    """Hyperparameters of the graph-guided engine.

    ``base`` carries the swarm parameters shared with the baseline engine;
    ``learn`` the graph thresholds and update cadence. The remaining three
    control the blend and inertia schedules.
    """

    base: PsoConfig
    learn: VigLearnConfig = field(default_factory=VigLearnConfig)
    alpha_cap: float = 0.3
    alpha_rate: float = 2.0
    inertia_decay: float = 0.6

    def __post_init__(self):
        if not 0.0 < self.alpha_cap < 1.0:
            raise ValueError(f"alpha_cap must be in (0, 1), got {self.alpha_cap}")
        if self.alpha_rate <= 0.0:
            raise ValueError(f"alpha_rate must be positive, got {self.alpha_rate}")
        if not 0.0 <= self.inertia_decay < 1.0:
            raise ValueError(
                f"inertia_decay must be in [0, 1), got {self.inertia_decay}"
            )


def alpha_schedule(t: int, t_max: int, cap: float = 0.3, rate: float = 2.0) -> float:
    """Blend weight cap*(1 - exp(-rate*t/t_max)): 0 at t=0, rising toward cap."""
    return cap * (1.0 - math.exp(-rate * t / t_max))


def inertia_schedule(omega: float, t: int, t_max: int, decay: float = 0.6) -> float:
    """Linearly decayed inertia omega*(1 - decay*t/t_max)."""
    return omega * (1.0 - decay * t / t_max)


def blend_velocity(
    v_std, graph: InteractionGraph, alpha: float, v_clamp: float
):
    """Blend standard velocities with neighbor-averaged ones, then clip.

    Dimensions without neighbors keep their standard velocity. Every
    component is clipped to [-v_clamp, v_clamp].
    """
    v_std = np.asarray(v_std, dtype=np.float64)
    row_sums = graph.row_sums
    if graph.has_edges:
        v_vig = graph.weights @ v_std
        blended = (1.0 - alpha) * v_std + alpha * np.divide(
            v_vig, row_sums, out=np.zeros_like(v_vig), where=row_sums > 0.0
        )
        out = np.where(row_sums > 0.0, blended, v_std)
    else:
        out = v_std.copy()
    return np.clip(out, -v_clamp, v_clamp)


def vigpso_step(
    state: SwarmState,
    graph: InteractionGraph,
    config: VigpsoConfig,
    objective: Objective,
    rng: RngStream,
) -> tuple[SwarmState, InteractionGraph]:
    """Advance one iteration; returns the state and the (possibly new) graph.

    Schedules use the iteration counter at entry, so the first iteration
    runs with alpha = 0 and undecayed inertia. After the swarm moves, the
    counter advances; on every ``update_interval``-th iteration the graph is
    re-learned from this iteration's movements (the first learning tick is
    at iteration ``update_interval``).
    """
    base = config.base
    if state.iteration >= base.max_iterations:
        raise ValueError(
            f"iteration {state.iteration} already at max_iterations {base.max_iterations}"
        )
    t = state.iteration
    omega_curr = inertia_schedule(base.omega, t, base.max_iterations, config.inertia_decay)
    alpha = alpha_schedule(t, base.max_iterations, config.alpha_cap, config.alpha_rate)

    update_due = (t + 1) % config.learn.update_interval == 0
    x_old = state.positions.copy() if update_due else None

    draws = rng.uniform(0.0, 1.0, size=(state.swarm_size, state.dim, 2))
    _kernels.run_iteration(
        state, draws, omega_curr, base.c1, base.c2, base.v_clamp,
        objective.space.lower, objective.space.upper, objective.evaluate,
        weights=graph.weights if graph.has_edges else None,
        row_sums=graph.row_sums if graph.has_edges else None,
        alpha=alpha,
    )
    state.iteration = t + 1
    if update_due:
        graph = update_graph(graph, state.positions - x_old, config.learn)
    return state, graph


def vigpso_run(
    config: VigpsoConfig, objective: Objective, seed: int, keep_graph: bool = False
) -> RunResult:
    """Run the graph-guided engine from a fresh seeded swarm."""
    base = config.base
    rng = RngStream(seed)
    with _Timer() as timer:
        state = init_swarm(
            objective.space, base.swarm_size, rng, objective, base.v_clamp
        )
        graph = InteractionGraph(objective.space.dim)
        trace = np.empty(base.max_iterations + 1)
        trace[0] = state.gbest_val
        for t in range(base.max_iterations):
            state, graph = vigpso_step(state, graph, config, objective, rng)
            trace[t + 1] = state.gbest_val
    return RunResult(
        algorithm="vigpso",
        function=objective.name,
        dim=objective.space.dim,
        seed=seed,
        trace=trace,
        final_value=float(trace[-1]),
        final_position=state.gbest_pos.copy(),
        wall_time_seconds=timer.elapsed,
        graph=graph if keep_graph else None,
    )
