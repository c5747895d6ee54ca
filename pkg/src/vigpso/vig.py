"""The variable interaction graph: storage, correlation learning, pruning.

Edge weights live in a dense symmetric d x d matrix with zero diagonal.
Learning compares, for every dimension pair, the Pearson correlation of the
swarm's single-iteration movements in those two dimensions against an add
threshold tau1 and a prune threshold tau2. Correlations in between leave the
existing edge untouched (hysteresis).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import FloatArray


@dataclass(eq=False)
class InteractionGraph:
    """Symmetric non-negative edge weights between dimensions, zero diagonal.

    Treat instances as immutable: learning returns a new graph rather than
    mutating in place.
    """

    dim: int
    weights: FloatArray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.weights is None:
            self.weights = np.zeros((self.dim, self.dim))
        else:
            self.weights = np.ascontiguousarray(self.weights, dtype=np.float64)
            if self.weights.shape != (self.dim, self.dim):
                raise ValueError(
                    f"weights shape {self.weights.shape} does not match dim {self.dim}"
                )
            if not np.array_equal(self.weights, self.weights.T):
                raise ValueError("weights must be symmetric")
            if np.any(np.diag(self.weights) != 0.0):
                raise ValueError("diagonal must be zero")
            if self.weights.min() < 0.0 or self.weights.max() > 1.0:
                raise ValueError("weights must lie in [0, 1]")
        self._row_sums = self.weights.sum(axis=1)
        self._has_edges = bool(self._row_sums.any())

    @property
    def row_sums(self) -> FloatArray:
        return self._row_sums

    @property
    def has_edges(self) -> bool:
        return self._has_edges

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(np.triu(self.weights, 1)))


@dataclass(frozen=True)
class VigLearnConfig:
    """Thresholds and cadence for graph learning.

    ``tau1`` above 1 is allowed and disables edge creation outright, since
    no correlation magnitude can exceed 1.
    """

    tau1: float = 0.5
    tau2: float = 0.3
    update_interval: int = 10

    def __post_init__(self):
        if not (0.0 < self.tau2 <= self.tau1):
            raise ValueError(
                f"thresholds must satisfy 0 < tau2 <= tau1, got tau1={self.tau1}, tau2={self.tau2}"
            )
        if self.update_interval < 1:
            raise ValueError(f"update_interval must be >= 1, got {self.update_interval}")


def pearson(a, b) -> float:
    """Pearson correlation of two equal-length samples; 0 if either is constant."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.shape != b.shape:
        raise ValueError("inputs must be 1-d vectors of equal length")
    if a.size < 2:
        raise ValueError("correlation needs at least 2 observations")
    da = a - a.mean()
    db = b - b.mean()
    denom = np.sqrt((da @ da) * (db @ db))
    if denom == 0.0:
        return 0.0
    return float(np.clip((da @ db) / denom, -1.0, 1.0))


def _movement_correlations(delta_x: FloatArray) -> FloatArray:
    """|Pearson| between every pair of movement columns, zero diagonal."""
    centered = delta_x - delta_x.mean(axis=0)
    sum_sq = np.einsum("ij,ij->j", centered, centered)
    cov = centered.T @ centered
    denom = np.sqrt(np.outer(sum_sq, sum_sq))
    with np.errstate(invalid="ignore", divide="ignore"):
        rho = np.where(denom > 0.0, cov / denom, 0.0)
    np.abs(rho, out=rho)
    np.clip(rho, 0.0, 1.0, out=rho)
    np.fill_diagonal(rho, 0.0)
    return rho


def update_graph(
    graph: InteractionGraph, delta_x, config: VigLearnConfig
) -> InteractionGraph:
    """Learn from one iteration's particle movements; returns a new graph.

    For each dimension pair: correlation magnitude above ``tau1`` sets the
    edge to that magnitude, below ``tau2`` removes the edge, anything in the
    hysteresis band keeps the previous weight. Constant movement columns
    correlate to 0 by convention and therefore shed their edges.
    """
    delta_x = np.asarray(delta_x, dtype=np.float64)
    if delta_x.ndim != 2 or delta_x.shape[1] != graph.dim:
        raise ValueError(
            f"delta_x must be (S, {graph.dim}), got {delta_x.shape}"
        )
    if delta_x.shape[0] < 2:
        raise ValueError("delta_x needs at least 2 particle rows")
    rho = _movement_correlations(delta_x)
    new = graph.weights.copy()
    add = rho > config.tau1
    prune = rho < config.tau2
    new[add] = rho[add]
    new[prune] = 0.0
    # rebuild from the upper triangle so symmetry holds exactly
    upper = np.triu(new, 1)
    return InteractionGraph(graph.dim, upper + upper.T)


def neighbors(graph: InteractionGraph, d: int) -> list[tuple[int, float]]:
    """Dimensions connected to ``d``, as (index, weight) pairs by index."""
    if not 0 <= d < graph.dim:
        raise IndexError(f"dimension index {d} out of range for dim {graph.dim}")
    row = graph.weights[d]
    idx = np.nonzero(row)[0]
    return [(int(j), float(row[j])) for j in idx]


def export_graph_csv(graph: InteractionGraph, path) -> None:
    """Write nonzero edges as ``i,j,weight`` rows with i < j."""
    lines = ["i,j,weight\n"]
    rows, cols = np.nonzero(np.triu(graph.weights, 1))
    for i, j in zip(rows, cols):
        lines.append(f"{i},{j},{float(graph.weights[i, j])!r}\n")
    with open(path, "w") as fh:
        fh.writelines(lines)
