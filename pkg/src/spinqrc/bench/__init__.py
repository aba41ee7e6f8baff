"""Benchmark harness: experiment configs, sweeps, and CSV/JSON output."""

from .config import (
    OTOC_TAU_GRID,
    PRESET_NAMES,
    PRESETS,
    TASKS,
    ExperimentConfig,
    build_config,
    config_field_names,
    parse_config_file,
    with_overrides,
)
from .io import format_cell, write_csv, write_json_sidecar
from .sweeps import (
    MG_COLUMNS,
    OTOC_COLUMNS,
    OTOC_SUMMARY_COLUMNS,
    TASK_COLUMNS,
    SweepResult,
    falling_crossing,
    run_mg_sweep,
    run_otoc_sweep,
    run_sweep,
    run_task_sweep,
    sample_seeds,
)

__all__ = [
    "ExperimentConfig",
    "MG_COLUMNS",
    "OTOC_COLUMNS",
    "OTOC_SUMMARY_COLUMNS",
    "OTOC_TAU_GRID",
    "PRESETS",
    "PRESET_NAMES",
    "SweepResult",
    "TASKS",
    "TASK_COLUMNS",
    "build_config",
    "config_field_names",
    "falling_crossing",
    "format_cell",
    "parse_config_file",
    "run_mg_sweep",
    "run_otoc_sweep",
    "run_sweep",
    "run_task_sweep",
    "sample_seeds",
    "with_overrides",
    "write_csv",
    "write_json_sidecar",
]
