"""Experiment protocol: repeated seeded runs, summary statistics, curve export.

An experiment is ``runs`` independent replications with seeds
``base_seed + 0 .. base_seed + runs - 1``. Summaries report worst, best,
mean, and population standard deviation (divide by N; the convention is
pinned here and printed in provenance files), plus the fraction of runs
whose final best lies within the tolerance of the objective's declared
optimum. Convergence curves are exported as per-iteration means across runs
with optional per-run columns and an optional log10 transform.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

import numpy as np

from . import baselines, lfwa
from .benchmarks import make_objective
from .core import RunConfig, RunRecord

__all__ = [
    "ExperimentSummary",
    "RunRecord",
    "ALGORITHMS",
    "default_params",
    "effective_population",
    "run_experiment",
    "summarize",
    "export_curves",
    "CurveTable",
    "build_summary_row",
    "params_fingerprint",
    "write_summary_csv",
    "write_summary_json",
    "write_curves_csv",
    "write_provenance_json",
    "SUMMARY_COLUMNS",
]

LOG10_FLOOR = 1e-300

SUMMARY_COLUMNS = [
    "algorithm",
    "function",
    "runs",
    "iterations",
    "pop_size",
    "worst",
    "best",
    "mean",
    "sd",
    "success_rate",
    "seed_base",
    "params_fingerprint",
]


@dataclass(frozen=True)
class ExperimentSummary:
    """Aggregate statistics over the final best values of one experiment."""

    worst: float
    best: float
    mean: float
    sd: float
    success_rate: float
    run_count: int
    finals: np.ndarray


def summarize(finals, declared_optimum: float, tolerance: float) -> ExperimentSummary:
    """Worst/best/mean/SD plus the success fraction against the declared optimum.

    SD is the population standard deviation (divide by N). A run counts as
    successful when |final - declared_optimum| <= tolerance.
    """
    finals = np.asarray(finals, dtype=float)
    if finals.size == 0:
        raise ValueError("finals must be non-empty")
    mean = float(np.mean(finals))
    sd = float(np.sqrt(np.mean((finals - mean) ** 2)))
    success = float(np.mean(np.abs(finals - declared_optimum) <= tolerance))
    return ExperimentSummary(
        worst=float(np.max(finals)),
        best=float(np.min(finals)),
        mean=mean,
        sd=sd,
        success_rate=success,
        run_count=int(finals.size),
        finals=finals,
    )


def _run_lfwa(objective, params, config):
    return lfwa.lfwa_run(objective, config)


ALGORITHMS = {
    "lfwa": _run_lfwa,
    "fwa": baselines.fwa_run,
    "spso": baselines.spso_run,
    "ba": baselines.ba_run,
}


def default_params(algorithm: str):
    """Documented default parameters for an algorithm (None for lfwa,
    which is configured entirely by RunConfig)."""
    if algorithm not in ALGORITHMS:
        valid = ", ".join(ALGORITHMS)
        raise KeyError(f"unknown algorithm {algorithm!r}; valid names: {valid}")
    return {
        "lfwa": None,
        "fwa": baselines.FwaParams(),
        "spso": baselines.SpsoParams(),
        "ba": baselines.BaParams(),
    }[algorithm]


def effective_population(algorithm: str, config: RunConfig, params) -> int:
    """The population size an algorithm actually runs with."""
    if algorithm == "spso":
        return params.swarm_size
    if algorithm == "ba":
        return params.population
    return config.population_size


def _execute_run(algorithm: str, objective_name: str, config: RunConfig, params) -> RunRecord:
    objective = make_objective(objective_name)
    try:
        return ALGORITHMS[algorithm](objective, params, config)
    except Exception as exc:
        raise RuntimeError(
            f"{algorithm} run on {objective_name} with seed {config.seed} failed: {exc}"
        ) from exc


def run_experiment(
    algorithm: str,
    objective_name: str,
    runs: int,
    config: RunConfig,
    base_seed: int,
    params=None,
    jobs: int = 1,
) -> tuple[ExperimentSummary, list[RunRecord]]:
    """Execute ``runs`` independent replications and aggregate their finals.

    Replication i uses seed ``base_seed + i``. With ``jobs > 1`` the
    replications run in separate processes; results are joined in seed
    order, so the output never depends on completion order.
    """
    if runs < 1:
        raise ValueError("runs must be at least 1")
    if algorithm not in ALGORITHMS:
        valid = ", ".join(ALGORITHMS)
        raise KeyError(f"unknown algorithm {algorithm!r}; valid names: {valid}")
    if params is None:
        params = default_params(algorithm)
    declared = make_objective(objective_name).declared_optimum

    configs = [replace(config, seed=base_seed + i) for i in range(runs)]
    if jobs > 1 and runs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, runs)) as pool:
            records = list(
                pool.map(
                    _execute_run,
                    [algorithm] * runs,
                    [objective_name] * runs,
                    configs,
                    [params] * runs,
                )
            )
    else:
        records = [_execute_run(algorithm, objective_name, c, params) for c in configs]

    finals = np.array([r.final_best.fitness for r in records])
    summary = summarize(finals, declared, config.tolerance)
    return summary, records


@dataclass(frozen=True)
class CurveTable:
    """Tabular convergence curves: one row per iteration."""

    columns: list[str]
    rows: np.ndarray


def export_curves(records: list[RunRecord], transform: str = "raw", include_runs: bool = True) -> CurveTable:
    """Per-iteration mean best-so-far across runs, with per-run columns.

    ``transform="log10"`` takes log10 of every emitted value, flooring the
    argument at 1e-300 first so exact zeros stay plottable.
    """
    if not records:
        raise ValueError("records must be non-empty")
    if transform not in ("raw", "log10"):
        raise ValueError(f"transform must be 'raw' or 'log10', got {transform!r}")
    lengths = {len(r.trajectory) for r in records}
    if len(lengths) != 1:
        raise ValueError(f"records have mixed iteration counts: {sorted(lengths)}")
    objectives = {r.objective for r in records}
    if len(objectives) != 1:
        raise ValueError(f"records mix objectives: {sorted(objectives)}")

    trajectories = np.vstack([r.trajectory for r in records])
    mean = trajectories.mean(axis=0)
    columns = ["iteration", "mean_best"]
    data = [np.arange(trajectories.shape[1], dtype=float), mean]
    if include_runs:
        for r, row in zip(records, trajectories):
            columns.append(f"run_{r.seed}")
            data.append(row)
    rows = np.column_stack(data)
    if transform == "log10":
        rows[:, 1:] = np.log10(np.maximum(rows[:, 1:], LOG10_FLOOR))
    return CurveTable(columns=columns, rows=rows)


def params_fingerprint(payload: dict) -> str:
    """Short stable hash of a resolved-parameter dictionary."""
    canonical = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]


def resolved_parameters(algorithm: str, config: RunConfig, params) -> dict:
    """Every knob that influenced an experiment, for provenance files."""
    payload = {
        "algorithm": algorithm,
        "population_size": effective_population(algorithm, config, params),
        "max_iterations": config.max_iterations,
        "tolerance": config.tolerance,
        "gaussian_sparks_per_generation": config.gaussian_spark_count
        if algorithm == "lfwa"
        else None,
        "xi": config.xi,
        "scalar_beta": config.scalar_beta if algorithm == "lfwa" else None,
        "sd_convention": "population (divide by N)",
        "algorithm_params": None if params is None else asdict(params),
    }
    return payload


def build_summary_row(
    algorithm: str,
    objective_name: str,
    runs: int,
    config: RunConfig,
    summary: ExperimentSummary,
    base_seed: int,
    params,
) -> dict:
    """One summary-CSV row, in SUMMARY_COLUMNS order."""
    return {
        "algorithm": algorithm,
        "function": objective_name,
        "runs": runs,
        "iterations": config.max_iterations,
        "pop_size": effective_population(algorithm, config, params),
        "worst": summary.worst,
        "best": summary.best,
        "mean": summary.mean,
        "sd": summary.sd,
        "success_rate": summary.success_rate,
        "seed_base": base_seed,
        "params_fingerprint": params_fingerprint(resolved_parameters(algorithm, config, params)),
    }


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_summary_csv(path, rows: list[dict]) -> None:
    lines = [",".join(SUMMARY_COLUMNS)]
    for row in rows:
        lines.append(",".join(_format_cell(row[c]) for c in SUMMARY_COLUMNS))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_summary_json(path, rows: list[dict]) -> None:
    with open(path, "w") as fh:
        json.dump(rows, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_curves_csv(path, table: CurveTable) -> None:
    lines = [",".join(table.columns)]
    for row in table.rows:
        cells = [str(int(row[0]))] + [repr(float(v)) for v in row[1:]]
        lines.append(",".join(cells))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_provenance_json(path, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, default=str)
        fh.write("\n")
