"""Disorder/sample sweeps for the three benchmarks and the OTOC scan.

Per-sample seeds derive from the master seed through distinct stream
tags, keyed by sample index alone, so every disorder grid point sees the
same disorder/input/noise realizations (common random numbers).  Jobs
are independent and scheduled over a worker pool; results keep
(grid index, sample index) order regardless of completion order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from ..chain import ChainParams, sample_disorder
from ..errors import DegenerateVarianceError
from ..evolve import make_plan
from ..otoc import otoc_curve
from ..readout import Score, SplitPlan, normalized_covariance, predict, train
from ..reservoir import drive, drive_closed_loop
from ..rng import derive_seed
from ..tasks import gen_binary_inputs, gen_mackey_glass, pc_targets, stm_targets
from .config import ExperimentConfig

TASK_COLUMNS = (
    "task", "N", "alpha", "B", "W", "tau", "V", "k_delta",
    "sample", "seed", "C", "wall_ms",
)
MG_COLUMNS = (
    "task", "N", "alpha", "B", "W", "tau", "V", "k_delta",
    "sample", "seed", "C", "l", "l_c", "censored", "wall_ms",
)
OTOC_COLUMNS = ("N", "alpha", "W", "tau", "sample", "O")
OTOC_SUMMARY_COLUMNS = (
    "N", "alpha", "W", "n_samples", "n_censored", "tau_th_mean", "tau_th_stderr",
)


@dataclass(frozen=True)
class SweepResult:
    """Plot-ready records plus per-grid-point aggregates."""

    task: str
    columns: tuple[str, ...]
    records: tuple[tuple, ...] = field(repr=False)
    aggregates: tuple[dict, ...]
    summary_columns: tuple[str, ...] = ()
    summary_records: tuple[tuple, ...] = ()

    def json_payload(self, config: ExperimentConfig) -> dict:
        return {
            "task": self.task,
            "config": asdict(config),
            "aggregates": list(self.aggregates),
        }


def sample_seeds(master_seed: int, sample: int) -> tuple[int, int, int]:
    """(disorder, input, noise) seeds for one sample index."""
    return (
        derive_seed(master_seed, "disorder", sample),
        derive_seed(master_seed, "inputs", sample),
        derive_seed(master_seed, "noise", sample),
    )


def falling_crossing(grid, values, threshold):
    """(crossing, censored): where a decaying curve first drops below the
    threshold, linearly interpolated; censored at the last grid point if
    it never does."""
    if values[0] < threshold:
        return float(grid[0]), False
    for j in range(1, len(values)):
        if values[j] < threshold:
            hi, lo = values[j - 1], values[j]
            frac = (hi - threshold) / (hi - lo)
            return float(grid[j - 1] + frac * (grid[j] - grid[j - 1])), False
    return float(grid[-1]), True


def _sample_chain(config: ExperimentConfig, alpha: float, w: float, disorder_seed: int):
    return sample_disorder(
        ChainParams(
            n_qubits=config.n_qubits,
            alpha=alpha,
            disorder_w=w,
            field_b=config.field_b,
            j0=config.j0,
            seed=disorder_seed,
        )
    )


def _score_or_none(y_true, y_pred):
    try:
        return normalized_covariance(y_true, y_pred)
    except DegenerateVarianceError:
        return None


def _aggregate(values_with_nulls) -> dict:
    kept = [v for v in values_with_nulls if v is not None]
    out = {
        "n": len(kept),
        "n_degenerate": len(values_with_nulls) - len(kept),
    }
    if kept:
        score = Score.from_values(kept)
        out["mean"] = score.mean
        out["stderr"] = score.stderr
    else:
        out["mean"] = None
        out["stderr"] = None
    return out


def _task_job(args) -> tuple:
    config, w, sample = args
    started = time.perf_counter()
    disorder_seed, input_seed, noise_seed = sample_seeds(config.master_seed, sample)
    spec = _sample_chain(config, config.alpha, w, disorder_seed)
    plan = make_plan(spec, tau=config.tau, subintervals=config.subintervals)
    inputs = gen_binary_inputs(config.total_steps, input_seed)
    make_targets = stm_targets if config.task == "stm" else pc_targets
    targets = make_targets(inputs, config.k_delta)
    signals = drive(plan, inputs, config.noise_sigma, noise_seed)
    split = SplitPlan(config.n_washout, config.n_train, config.n_test)
    model = train(
        signals.entries[split.train_slice], targets[split.train_slice], config.ridge
    )
    predictions = predict(model, signals.entries[split.test_slice])
    c = _score_or_none(targets[split.test_slice], predictions)
    wall_ms = (time.perf_counter() - started) * 1000.0
    return disorder_seed, c, wall_ms


def run_task_sweep(config: ExperimentConfig) -> SweepResult:
    """STM/PC sweep over the disorder grid; one C per (W, sample)."""
    jobs = [
        (config, w, sample)
        for w in config.disorder_grid
        for sample in range(config.n_samples)
    ]
    outputs = _map_jobs(_task_job, jobs, config.workers)

    records = []
    aggregates = []
    per_point = config.n_samples
    for g, w in enumerate(config.disorder_grid):
        chunk = outputs[g * per_point : (g + 1) * per_point]
        for sample, (seed, c, wall_ms) in enumerate(chunk):
            records.append(
                (
                    config.task, config.n_qubits, config.alpha, config.field_b,
                    w, config.tau, config.subintervals, config.k_delta,
                    sample, seed, c, wall_ms if config.timing else None,
                )
            )
        aggregates.append({"W": w, **_aggregate([c for _, c, _ in chunk])})
    return SweepResult(
        task=config.task,
        columns=TASK_COLUMNS,
        records=tuple(records),
        aggregates=tuple(aggregates),
    )


def _mg_job(args) -> tuple:
    config, w, sample = args
    started = time.perf_counter()
    disorder_seed, _, noise_seed = sample_seeds(config.master_seed, sample)
    l_max = config.horizons[-1]
    warm_len = config.n_washout + config.n_train
    sequence = gen_mackey_glass(warm_len + l_max + 1, k_delta=config.k_delta)
    s = sequence.normalized

    spec = _sample_chain(config, config.alpha, w, disorder_seed)
    plan = make_plan(spec, tau=config.tau, subintervals=config.subintervals)
    signals = drive(plan, s[:warm_len], config.noise_sigma, noise_seed)
    model = train(
        signals.entries[config.n_washout : warm_len],
        s[config.n_washout + 1 : warm_len + 1],
        config.ridge,
    )
    predictions = drive_closed_loop(
        plan, model, s[:warm_len], l_max, config.noise_sigma, noise_seed
    )
    truth = s[warm_len + 1 : warm_len + l_max + 1]
    scores = [
        _score_or_none(truth[:l], predictions[:l]) for l in config.horizons
    ]
    wall_ms = (time.perf_counter() - started) * 1000.0
    return disorder_seed, scores, wall_ms


def run_mg_sweep(config: ExperimentConfig) -> SweepResult:
    """Closed-loop prediction quality over horizons, per disorder value.

    The closed loop runs once to the largest horizon; shorter horizons
    score prefixes of the same prediction.  l_c comes from the mean
    curve's first drop below the threshold, censored at the largest
    horizon when the curve never drops.
    """
    jobs = [
        (config, w, sample)
        for w in config.disorder_grid
        for sample in range(config.n_samples)
    ]
    outputs = _map_jobs(_mg_job, jobs, config.workers)

    records = []
    aggregates = []
    per_point = config.n_samples
    for g, w in enumerate(config.disorder_grid):
        chunk = outputs[g * per_point : (g + 1) * per_point]
        by_horizon = [
            _aggregate([scores[j] for _, scores, _ in chunk])
            for j in range(len(config.horizons))
        ]
        means = [agg["mean"] for agg in by_horizon]
        if any(m is None for m in means):
            l_c, censored = None, True
        else:
            l_c, censored = falling_crossing(
                np.asarray(config.horizons, dtype=float), means, config.threshold
            )
        for sample, (seed, scores, wall_ms) in enumerate(chunk):
            for l, c in zip(config.horizons, scores):
                records.append(
                    (
                        config.task, config.n_qubits, config.alpha, config.field_b,
                        w, config.tau, config.subintervals, config.k_delta,
                        sample, seed, c, l, l_c, censored,
                        wall_ms if config.timing else None,
                    )
                )
        aggregates.append(
            {
                "W": w,
                "l_c": l_c,
                "censored": censored,
                "horizons": list(config.horizons),
                "mean_curve": means,
                "stderr_curve": [agg["stderr"] for agg in by_horizon],
                "n_degenerate": sum(agg["n_degenerate"] for agg in by_horizon),
            }
        )
    return SweepResult(
        task=config.task,
        columns=MG_COLUMNS,
        records=tuple(records),
        aggregates=tuple(aggregates),
    )


def _otoc_job(args) -> tuple:
    config, alpha, w, sample = args
    disorder_seed, _, _ = sample_seeds(config.master_seed, sample)
    spec = _sample_chain(config, alpha, w, disorder_seed)
    curve = otoc_curve(spec, np.asarray(config.tau_grid), config.threshold)
    return curve.values.tolist(), curve.tau_threshold


def run_otoc_sweep(config: ExperimentConfig) -> SweepResult:
    """Disorder-averaged OTOC curves and threshold times over (alpha, W)."""
    grid = [(alpha, w) for alpha in config.alphas for w in config.disorder_grid]
    jobs = [
        (config, alpha, w, sample)
        for alpha, w in grid
        for sample in range(config.n_samples)
    ]
    outputs = _map_jobs(_otoc_job, jobs, config.workers)

    records = []
    aggregates = []
    summary = []
    per_point = config.n_samples
    for g, (alpha, w) in enumerate(grid):
        chunk = outputs[g * per_point : (g + 1) * per_point]
        for sample, (values, _) in enumerate(chunk):
            for tau, value in zip(config.tau_grid, values):
                records.append((config.n_qubits, alpha, w, tau, sample, value))
        crossings = [t for _, t in chunk if t is not None]
        n_censored = per_point - len(crossings)
        agg = _aggregate(crossings if crossings else [None])
        mean_curve = np.array([v for v, _ in chunk]).mean(axis=0)
        summary.append(
            (
                config.n_qubits, alpha, w, per_point, n_censored,
                agg["mean"], agg["stderr"],
            )
        )
        aggregates.append(
            {
                "alpha": alpha,
                "W": w,
                "tau_grid": list(config.tau_grid),
                "mean_curve": mean_curve.tolist(),
                "tau_th_mean": agg["mean"],
                "tau_th_stderr": agg["stderr"],
                "n_censored": n_censored,
            }
        )
    return SweepResult(
        task=config.task,
        columns=OTOC_COLUMNS,
        records=tuple(records),
        aggregates=tuple(aggregates),
        summary_columns=OTOC_SUMMARY_COLUMNS,
        summary_records=tuple(summary),
    )


def _map_jobs(fn, jobs, workers: int) -> list:
    if workers == 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def run_sweep(config: ExperimentConfig) -> SweepResult:
    if config.task in ("stm", "pc"):
        return run_task_sweep(config)
    if config.task == "mg":
        return run_mg_sweep(config)
    return run_otoc_sweep(config)
