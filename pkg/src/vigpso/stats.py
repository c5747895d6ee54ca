"""Nonparametric comparison machinery: Mann-Whitney U and sample summaries.

The U statistic is reported for the first sample, counting pairs where its
value exceeds the second sample's (ties count one half). Small tie-free
samples (combined n <= 16) get an exact p-value from the full null
distribution of U; larger or tied samples use the normal approximation with
tie-corrected variance and a continuity correction. Two-sided throughout,
significance at alpha = 0.05.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

ALPHA = 0.05
_EXACT_MAX_TOTAL = 16


@dataclass(frozen=True)
class SampleSummary:
    """Descriptive statistics of one sample (std uses the n-1 denominator)."""

    n: int
    mean: float
    std_dev: float
    median: float
    q1: float
    q3: float
    min: float
    max: float


@dataclass(frozen=True)
class MannWhitneyResult:
    """Two-sided test outcome.

    ``lower_objective`` names the sample with the lower median ("first" or
    "second") when the difference is significant, else "none".
    """

    u_statistic: float
    p_value: float
    significant: bool
    lower_objective: str


def summarize(sample) -> SampleSummary:
    """Order statistics and moments; quartiles by linear interpolation."""
    x = np.asarray(sample, dtype=np.float64)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("sample must be a non-empty 1-d vector")
    q1, med, q3 = np.percentile(x, [25.0, 50.0, 75.0])
    std = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
    return SampleSummary(
        n=int(x.size),
        mean=float(x.mean()),
        std_dev=std,
        median=float(med),
        q1=float(q1),
        q3=float(q3),
        min=float(x.min()),
        max=float(x.max()),
    )


def _rankdata(x: np.ndarray) -> np.ndarray:
    """Ascending ranks starting at 1, ties averaged."""
    sorter = np.argsort(x, kind="mergesort")
    inv = np.empty_like(sorter)
    inv[sorter] = np.arange(x.size)
    sx = x[sorter]
    boundaries = np.r_[True, sx[1:] != sx[:-1]]
    dense = np.cumsum(boundaries)[inv]
    edges = np.r_[np.nonzero(boundaries)[0], x.size]
    average_rank = 0.5 * (edges[:-1] + 1 + edges[1:])
    return average_rank[dense - 1]


@lru_cache(maxsize=None)
def _u_counts(n: int, m: int) -> tuple[int, ...]:
    """Null distribution of U: counts[u] arrangements of n vs m ranks."""
    if n == 0 or m == 0:
        return tuple([1] + [0] * (n * m))
    with_a = _u_counts(n - 1, m)   # largest rank belongs to the first sample
    with_b = _u_counts(n, m - 1)   # largest rank belongs to the second
    out = [0] * (n * m + 1)
    for u, c in enumerate(with_a):
        out[u + m] += c
    for u, c in enumerate(with_b):
        out[u] += c
    return tuple(out)


def _exact_p(u: float, n: int, m: int) -> float:
    counts = _u_counts(n, m)
    total = math.comb(n + m, n)
    u_int = int(round(u))
    le = sum(counts[: u_int + 1])
    ge = sum(counts[u_int:])
    return min(1.0, 2.0 * min(le, ge) / total)


def _normal_p(u: float, n: int, m: int, combined: np.ndarray) -> float:
    big_n = n + m
    mu = 0.5 * n * m
    _, tie_sizes = np.unique(combined, return_counts=True)
    tie_term = float(np.sum(tie_sizes.astype(np.float64) ** 3 - tie_sizes))
    variance = (n * m / 12.0) * ((big_n + 1) - tie_term / (big_n * (big_n - 1)))
    if variance <= 0.0:
        return 1.0
    z = (abs(u - mu) - 0.5) / math.sqrt(variance)
    if z <= 0.0:
        return 1.0
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def mann_whitney_u(a, b, method: str = "auto") -> MannWhitneyResult:
    """Two-sided Mann-Whitney U test of two independent samples.

    ``method`` is "auto" (exact for small tie-free samples, else normal
    approximation), or "exact"/"normal" to force a path.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.size < 2 or b.size < 2:
        raise ValueError("both samples must be 1-d with at least 2 values")
    n, m = a.size, b.size
    combined = np.concatenate([a, b])
    ranks = _rankdata(combined)
    u = float(ranks[:n].sum() - 0.5 * n * (n + 1))

    has_ties = np.unique(combined).size < combined.size
    if method == "auto":
        use_exact = (n + m) <= _EXACT_MAX_TOTAL and not has_ties
    elif method == "exact":
        if has_ties:
            raise ValueError("exact method is only defined for tie-free samples")
        use_exact = True
    elif method == "normal":
        use_exact = False
    else:
        raise ValueError(f"unknown method {method!r}")

    p = _exact_p(u, n, m) if use_exact else _normal_p(u, n, m, combined)
    significant = p < ALPHA
    if significant:
        med_a, med_b = float(np.median(a)), float(np.median(b))
        if med_a < med_b:
            lower = "first"
        elif med_b < med_a:
            lower = "second"
        else:
            lower = "none"
    else:
        lower = "none"
    return MannWhitneyResult(
        u_statistic=u, p_value=float(p), significant=significant, lower_objective=lower
    )
