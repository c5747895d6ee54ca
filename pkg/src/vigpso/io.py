"""Export and import of run data, reports, and flat config files.

Three tabular schemas, each available as CSV or JSON (a JSON file holds the
list of row objects with the same fields):

* traces:  algorithm, function, dim, seed, iteration, gbest
* finals:  algorithm, function, dim, seed, final_value, wall_time_seconds
* report:  function, dim, pso_mean, pso_std, vigpso_mean, vigpso_std,
           u_statistic, p_value, winner

Floats are serialized with full round-trip precision; any display rounding
happens only in formatted report tables. Config files are flat
``key = value`` text with ``#`` comments.
"""

from __future__ import annotations

import csv
import json
import os
from typing import Iterable

from .core import RunResult
from .pso import PsoConfig
from .vig import VigLearnConfig

TRACE_FIELDS = ["algorithm", "function", "dim", "seed", "iteration", "gbest"]
FINAL_FIELDS = ["algorithm", "function", "dim", "seed", "final_value", "wall_time_seconds"]
REPORT_FIELDS = [
    "function", "dim", "pso_mean", "pso_std", "vigpso_mean", "vigpso_std",
    "u_statistic", "p_value", "winner",
]

CONFIG_KEYS = (
    "omega", "c1", "c2", "swarm_size", "max_iterations", "v_clamp",
    "tau1", "tau2", "update_interval", "alpha_cap", "alpha_rate", "inertia_decay",
)
_INT_KEYS = {"swarm_size", "max_iterations", "update_interval"}


def _fmt(value):
    if isinstance(value, float):
        return repr(float(value))  # shortest round-trip text, numpy scalars included
    return value


def _write_rows(rows: list[dict], fields: list[str], path: str, format: str) -> str:
    try:
        if format == "csv":
            with open(path, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=fields)
                writer.writeheader()
                for row in rows:
                    writer.writerow({k: _fmt(row[k]) for k in fields})
        elif format == "json":
            with open(path, "w") as fh:
                json.dump(rows, fh, indent=1)
                fh.write("\n")
        else:
            raise ValueError(f"unknown format {format!r}; use 'csv' or 'json'")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


def _coerce(row: dict) -> dict:
    out = {}
    for key, value in row.items():
        if key in ("algorithm", "function", "winner"):
            out[key] = value
        elif key in ("dim", "seed", "iteration"):
            out[key] = int(value)
        else:
            out[key] = float(value)
    return out


def _read_rows(path: str) -> list[dict]:
    if str(path).endswith(".json"):
        with open(path) as fh:
            return [_coerce(row) for row in json.load(fh)]
    with open(path, newline="") as fh:
        return [_coerce(row) for row in csv.DictReader(fh)]


def trace_rows(results: Iterable[RunResult], stride: int = 1) -> list[dict]:
    """Strided trace rows: iterations 0, stride, 2*stride, ..."""
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    rows = []
    for r in results:
        for t in range(0, len(r.trace), stride):
            rows.append({
                "algorithm": r.algorithm, "function": r.function, "dim": r.dim,
                "seed": r.seed, "iteration": t, "gbest": float(r.trace[t]),
            })
    return rows


def final_rows(results: Iterable[RunResult]) -> list[dict]:
    return [
        {
            "algorithm": r.algorithm, "function": r.function, "dim": r.dim,
            "seed": r.seed, "final_value": r.final_value,
            "wall_time_seconds": r.wall_time_seconds,
        }
        for r in results
    ]


def split_out_path(path: str, format: str) -> tuple[str, str]:
    """Derive the traces and finals file names from one output path."""
    stem, ext = os.path.splitext(str(path))
    if ext.lower() not in (".csv", ".json"):
        stem = str(path)
    return f"{stem}_traces.{format}", f"{stem}_finals.{format}"


def export_results(
    results: list[RunResult], path: str, format: str = "csv", trace_stride: int = 1
) -> tuple[str, str]:
    """Write traces and finals files next to ``path``; returns their paths."""
    traces_path, finals_path = split_out_path(path, format)
    _write_rows(trace_rows(results, trace_stride), TRACE_FIELDS, traces_path, format)
    _write_rows(final_rows(results), FINAL_FIELDS, finals_path, format)
    return traces_path, finals_path


def export_report(report, path: str, format: str = "csv") -> str:
    """Write one row per (function, dim) comparison cell."""
    rows = [
        {
            "function": cell.function, "dim": cell.dim,
            "pso_mean": cell.pso_summary.mean, "pso_std": cell.pso_summary.std_dev,
            "vigpso_mean": cell.vigpso_summary.mean,
            "vigpso_std": cell.vigpso_summary.std_dev,
            "u_statistic": cell.test.u_statistic, "p_value": cell.test.p_value,
            "winner": cell.winner,
        }
        for cell in report.cells
    ]
    return _write_rows(rows, REPORT_FIELDS, str(path), format)


def load_traces(path: str) -> list[dict]:
    return _read_rows(path)


def load_finals(path: str) -> list[dict]:
    return _read_rows(path)


def load_report(path: str) -> list[dict]:
    rows = _read_rows(path)
    for row in rows:
        row["dim"] = int(row["dim"])
    return rows


def read_config_file(path: str) -> dict:
    """Parse flat ``key = value`` config text; unknown keys are an error."""
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ValueError(
                    f"{path}:{lineno}: unknown key {key!r}; known keys: {', '.join(CONFIG_KEYS)}"
                )
            try:
                number = float(text.strip())
            except ValueError:
                raise ValueError(f"{path}:{lineno}: {key} must be numeric, got {text.strip()!r}") from None
            values[key] = int(number) if key in _INT_KEYS else number
    return values


def write_config_file(values: dict, path: str) -> str:
    unknown = set(values) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    with open(path, "w") as fh:
        for key in CONFIG_KEYS:
            if key in values:
                fh.write(f"{key} = {_fmt(values[key])}\n")
    return str(path)


GRID_KEYS = (
    "omega_values", "c_values", "tau1_values", "tau2_values",
    "interval_values", "tuning_iterations", "tuning_runs",
)
_GRID_LIST_KEYS = {"omega_values", "c_values", "tau1_values", "tau2_values"}


def read_grid_file(path: str):
    """Parse a tuning grid file: list keys take comma-separated numbers."""
    from .harness import TuningGrid

    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            if key not in GRID_KEYS:
                raise ValueError(
                    f"{path}:{lineno}: unknown key {key!r}; known keys: {', '.join(GRID_KEYS)}"
                )
            try:
                if key in _GRID_LIST_KEYS:
                    values[key] = tuple(float(v) for v in text.split(","))
                elif key == "interval_values":
                    values[key] = tuple(int(float(v)) for v in text.split(","))
                else:
                    values[key] = int(float(text.strip()))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: cannot parse value for {key}") from None
    return TuningGrid(**values)


def pso_config_values(config: PsoConfig) -> dict:
    return {
        "omega": config.omega, "c1": config.c1, "c2": config.c2,
        "swarm_size": config.swarm_size, "max_iterations": config.max_iterations,
        "v_clamp": config.v_clamp,
    }


def vigpso_config_values(config) -> dict:
    values = pso_config_values(config.base)
    values.update({
        "tau1": config.learn.tau1, "tau2": config.learn.tau2,
        "update_interval": config.learn.update_interval,
        "alpha_cap": config.alpha_cap, "alpha_rate": config.alpha_rate,
        "inertia_decay": config.inertia_decay,
    })
    return values


def pso_config_from_values(values: dict, defaults: PsoConfig) -> PsoConfig:
    base = pso_config_values(defaults)
    base.update({k: v for k, v in values.items() if k in base})
    return PsoConfig(**base)


def vigpso_config_from_values(values: dict, defaults) -> "VigpsoConfig":
    from .engine import VigpsoConfig

    merged = vigpso_config_values(defaults)
    unknown = set(values) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    merged.update(values)
    return VigpsoConfig(
        base=PsoConfig(
            omega=merged["omega"], c1=merged["c1"], c2=merged["c2"],
            swarm_size=merged["swarm_size"], max_iterations=merged["max_iterations"],
            v_clamp=merged["v_clamp"],
        ),
        learn=VigLearnConfig(
            tau1=merged["tau1"], tau2=merged["tau2"],
            update_interval=merged["update_interval"],
        ),
        alpha_cap=merged["alpha_cap"],
        alpha_rate=merged["alpha_rate"],
        inertia_decay=merged["inertia_decay"],
    )
