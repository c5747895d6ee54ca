"""Iteration kernels shared by the two engines.

One full swarm iteration (velocity update, optional graph-blended velocity,
position update, bound clamp, personal/global best bookkeeping) is
implemented twice with identical arithmetic:

* a numba kernel used when the objective is a compiled (jitted) function,
* a per-particle numpy loop used for arbitrary Python objectives.

Randomness is drawn by the caller in one ``(S, d, 2)`` block per iteration
so both paths consume the stream identically. Global best updates are
asynchronous: a particle sees improvements made by lower-indexed particles
within the same iteration.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
    from numba.extending import is_jitted

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency, belt and braces
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

    def is_jitted(f) -> bool:
        return False


def maybe_njit(func):
    """Compile ``func`` with numba when available, else return it unchanged."""
    if HAVE_NUMBA:
        return njit(cache=True)(func)
    return func


_EMPTY_MATRIX = np.zeros((0, 0))
_EMPTY_VECTOR = np.zeros(0)


def _iteration_python(
    positions, velocities, pbest_pos, pbest_val, gbest_pos, gbest_val,
    draws, omega, c1, c2, v_clamp, lower, upper,
    weights, row_sums, use_graph, alpha, evaluate,
):
    swarm_size = positions.shape[0]
    for i in range(swarm_size):
        r1 = draws[i, :, 0]
        r2 = draws[i, :, 1]
        v_std = (
            omega * velocities[i]
            + c1 * r1 * (pbest_pos[i] - positions[i])
            + c2 * r2 * (gbest_pos - positions[i])
        )
        if use_graph:
            v_vig = weights @ v_std
            blended = (1.0 - alpha) * v_std + alpha * np.divide(
                v_vig, row_sums, out=np.zeros_like(v_vig), where=row_sums > 0.0
            )
            v = np.where(row_sums > 0.0, blended, v_std)
        else:
            v = v_std
        np.clip(v, -v_clamp, v_clamp, out=v)
        velocities[i] = v
        positions[i] = np.clip(positions[i] + v, lower, upper)
        f = evaluate(positions[i])
        if f < pbest_val[i]:
            pbest_val[i] = f
            pbest_pos[i] = positions[i]
            if f < gbest_val:
                gbest_val = f
                gbest_pos[:] = positions[i]
    return gbest_val


@njit
def _iteration_jit(
    positions, velocities, pbest_pos, pbest_val, gbest_pos, gbest_val,
    draws, omega, c1, c2, v_clamp, lower, upper,
    weights, row_sums, use_graph, alpha, evaluate,
):
    swarm_size, dim = positions.shape
    v_std = np.empty(dim)
    for i in range(swarm_size):
        for j in range(dim):
            r1 = draws[i, j, 0]
            r2 = draws[i, j, 1]
            v_std[j] = (
                omega * velocities[i, j]
                + c1 * r1 * (pbest_pos[i, j] - positions[i, j])
                + c2 * r2 * (gbest_pos[j] - positions[i, j])
            )
        if use_graph:
            v_vig = np.dot(weights, v_std)
            for j in range(dim):
                if row_sums[j] > 0.0:
                    v = (1.0 - alpha) * v_std[j] + alpha * (v_vig[j] / row_sums[j])
                else:
                    v = v_std[j]
                if v > v_clamp:
                    v = v_clamp
                elif v < -v_clamp:
                    v = -v_clamp
                velocities[i, j] = v
        else:
            for j in range(dim):
                v = v_std[j]
                if v > v_clamp:
                    v = v_clamp
                elif v < -v_clamp:
                    v = -v_clamp
                velocities[i, j] = v
        for j in range(dim):
            x = positions[i, j] + velocities[i, j]
            if x < lower[j]:
                x = lower[j]
            elif x > upper[j]:
                x = upper[j]
            positions[i, j] = x
        f = evaluate(positions[i])
        if f < pbest_val[i]:
            pbest_val[i] = f
            for j in range(dim):
                pbest_pos[i, j] = positions[i, j]
            if f < gbest_val:
                gbest_val = f
                for j in range(dim):
                    gbest_pos[j] = positions[i, j]
    return gbest_val


def run_iteration(
    state, draws, omega, c1, c2, v_clamp, lower, upper, evaluate,
    weights=None, row_sums=None, alpha=0.0,
) -> None:
    """Advance ``state`` by one iteration in place (does not touch the counter).

    ``weights``/``row_sums`` enable the graph-blended velocity; pass None for
    the plain update. Dispatches to the compiled kernel when the objective is
    a jitted function.
    """
    use_graph = weights is not None
    w = weights if use_graph else _EMPTY_MATRIX
    rs = row_sums if use_graph else _EMPTY_VECTOR
    impl = _iteration_jit if (HAVE_NUMBA and is_jitted(evaluate)) else _iteration_python
    state.gbest_val = float(
        impl(
            state.positions, state.velocities, state.pbest_pos, state.pbest_val,
            state.gbest_pos, state.gbest_val,
            draws, float(omega), float(c1), float(c2), float(v_clamp),
            lower, upper, w, rs, use_graph, float(alpha), evaluate,
        )
    )
