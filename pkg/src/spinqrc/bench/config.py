"""Experiment configuration: presets, flat key=value config files, and
command-line overrides, merged in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from ..errors import ConfigError
from ..qstate import MAX_QUBITS

TASKS = ("stm", "pc", "mg", "otoc")
PRESET_NAMES = ("paper", "desk")

# Shared evaluation grid for OTOC curves: covers growth and saturation.
OTOC_TAU_GRID = (
    0.125, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0,
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one sweep needs; immutable and picklable for workers."""

    task: str
    n_qubits: int
    alpha: float
    disorder_grid: tuple[float, ...]
    tau: float
    k_delta: int = 0
    subintervals: int = 10
    field_b: float = 4.0
    j0: float = 1.0
    n_washout: int = 1000
    n_train: int = 3000
    n_test: int = 1000
    horizons: tuple[int, ...] = ()      # MG prediction-horizon grid
    tau_grid: tuple[float, ...] = ()    # OTOC evaluation times
    alpha_grid: tuple[float, ...] = ()  # OTOC exponent grid; () = (alpha,)
    threshold: float = 0.0              # crossing level (OTOC 0.2, MG 0.5)
    n_samples: int = 10
    master_seed: int = 0
    noise_sigma: float = 0.0
    ridge: float = 0.0
    w_c: float | None = None            # optional axis normalization, echoed only
    workers: int = 1
    timing: bool = False                # fill the wall_ms column (non-deterministic)

    def __post_init__(self):
        if self.task not in TASKS:
            raise ConfigError(f"unknown task {self.task!r}; expected one of {TASKS}")
        if not 2 <= self.n_qubits <= MAX_QUBITS:
            raise ConfigError(
                f"n_qubits={self.n_qubits} outside dense-matrix range [2, {MAX_QUBITS}]"
            )
        if not self.disorder_grid:
            raise ConfigError("disorder grid is empty")
        if min(self.disorder_grid) < 0:
            raise ConfigError("disorder values must be >= 0")
        if self.n_samples < 1:
            raise ConfigError(f"n_samples={self.n_samples} must be >= 1")
        if self.workers < 1:
            raise ConfigError(f"workers={self.workers} must be >= 1")
        if self.tau <= 0:
            raise ConfigError(f"tau={self.tau} must be > 0")
        if min(self.n_washout, self.n_train, self.n_test) < 0:
            raise ConfigError("split sizes must be >= 0")
        if self.noise_sigma < 0 or self.ridge < 0:
            raise ConfigError("noise_sigma and ridge must be >= 0")
        if self.task in ("stm", "pc"):
            if self.k_delta < 0:
                raise ConfigError(f"k_delta={self.k_delta} must be >= 0")
            if self.n_test < 2:
                raise ConfigError("need n_test >= 2 to score a covariance")
        if self.task == "mg":
            if len(self.horizons) == 0:
                raise ConfigError("mg needs a nonempty horizons grid")
            if min(self.horizons) < 2:
                raise ConfigError("mg horizons must be >= 2 (scores need 2 points)")
            if any(b <= a for a, b in zip(self.horizons, self.horizons[1:])):
                raise ConfigError("mg horizons must be strictly increasing")
        if self.task == "otoc":
            if len(self.tau_grid) == 0:
                raise ConfigError("otoc needs a nonempty tau grid")
            if any(b <= a for a, b in zip(self.tau_grid, self.tau_grid[1:])):
                raise ConfigError("otoc tau grid must be strictly increasing")
            if min(self.tau_grid) < 0:
                raise ConfigError("otoc tau grid must be nonnegative")

    @property
    def alphas(self) -> tuple[float, ...]:
        return self.alpha_grid if self.alpha_grid else (self.alpha,)

    @property
    def total_steps(self) -> int:
        return self.n_washout + self.n_train + self.n_test


# Full-scale survey settings and laptop-scale counterparts.  Desk presets trade
# qubits and samples for runtime while keeping every qualitative trend.
PRESETS: dict[tuple[str, str], dict] = {
    ("stm", "paper"): dict(
        n_qubits=10, alpha=0.4, tau=1.0, k_delta=16,
        disorder_grid=(1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 14.0, 20.0),
        n_washout=1000, n_train=3000, n_test=1000, n_samples=100,
    ),
    ("stm", "desk"): dict(
        n_qubits=7, alpha=0.4, tau=1.0, k_delta=8,
        disorder_grid=(1.0, 20.0),
        n_washout=500, n_train=1500, n_test=500, n_samples=20,
    ),
    ("pc", "paper"): dict(
        n_qubits=10, alpha=0.4, tau=1.0, k_delta=4,
        disorder_grid=(1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 14.0, 20.0),
        n_washout=1000, n_train=3000, n_test=1000, n_samples=100,
    ),
    ("pc", "desk"): dict(
        n_qubits=7, alpha=0.4, tau=1.0, k_delta=2,
        disorder_grid=(1.0, 20.0),
        n_washout=500, n_train=1500, n_test=500, n_samples=20,
    ),
    ("mg", "paper"): dict(
        n_qubits=10, alpha=0.8, tau=2.0, k_delta=17,
        disorder_grid=(1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 16.0, 20.0),
        n_washout=1000, n_train=10000, n_test=0,
        horizons=(2, 3, 4, 5, 6, 8, 10, 13, 16, 20, 25, 32, 40, 50, 63, 79, 100),
        threshold=0.5, n_samples=300, noise_sigma=1e-6,
    ),
    ("mg", "desk"): dict(
        n_qubits=8, alpha=0.8, tau=2.0, k_delta=17,
        disorder_grid=(8.0,),
        n_washout=1000, n_train=3000, n_test=0,
        horizons=(2, 3, 4, 5, 6, 8, 10),
        threshold=0.5, n_samples=10, noise_sigma=1e-6,
    ),
    ("otoc", "paper"): dict(
        n_qubits=10, alpha=0.4, alpha_grid=(0.4, 0.8, 1.2), tau=1.0,
        disorder_grid=(1.0, 2.0, 4.0, 6.0, 8.0, 12.0, 16.0, 20.0),
        tau_grid=OTOC_TAU_GRID, threshold=0.2, n_samples=100,
    ),
    ("otoc", "desk"): dict(
        n_qubits=8, alpha=0.4, tau=1.0,
        disorder_grid=(4.0,),
        tau_grid=OTOC_TAU_GRID, threshold=0.2, n_samples=20,
    ),
}

_INT_KEYS = {
    "n_qubits", "k_delta", "subintervals", "n_washout", "n_train", "n_test",
    "n_samples", "master_seed", "workers",
}
_FLOAT_KEYS = {"alpha", "tau", "field_b", "j0", "threshold", "noise_sigma", "ridge", "w_c"}
_FLOAT_LIST_KEYS = {"disorder_grid", "tau_grid", "alpha_grid"}
_INT_LIST_KEYS = {"horizons"}
_BOOL_KEYS = {"timing"}

_FILE_KEYS = (
    _INT_KEYS | _FLOAT_KEYS | _FLOAT_LIST_KEYS | _INT_LIST_KEYS | _BOOL_KEYS
)


def _coerce(key: str, raw: str):
    try:
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _FLOAT_LIST_KEYS:
            return tuple(float(part) for part in raw.split(",") if part.strip())
        if key in _INT_LIST_KEYS:
            return tuple(int(part) for part in raw.split(",") if part.strip())
        if key in _BOOL_KEYS:
            lowered = raw.strip().lower()
            if lowered in ("1", "true", "yes"):
                return True
            if lowered in ("0", "false", "no"):
                return False
            raise ValueError(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    raise ConfigError(f"unknown config key: {key}")


def parse_config_file(path) -> dict:
    """Flat `key = value` lines; # comments and blank lines are skipped."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    values: dict = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in _FILE_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown config key: {key}")
        values[key] = _coerce(key, raw)
    return values


def build_config(task: str, preset: str = "desk", config_path=None, **overrides) -> ExperimentConfig:
    """Merge preset defaults, an optional config file, and overrides."""
    if (task, preset) not in PRESETS:
        raise ConfigError(f"no preset {preset!r} for task {task!r}")
    merged = dict(PRESETS[(task, preset)])
    if config_path is not None:
        merged.update(parse_config_file(config_path))
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(task=task, **merged)


def with_overrides(config: ExperimentConfig, **changes) -> ExperimentConfig:
    """Frozen-dataclass update that re-runs validation."""
    present = {k: v for k, v in changes.items() if v is not None}
    return replace(config, **present)


def config_field_names() -> tuple[str, ...]:
    return tuple(f.name for f in fields(ExperimentConfig))
