"""Linear readout: least-squares training, affine prediction, and the
normalized-covariance score used across all benchmarks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, DegenerateVarianceError

LSTSQ_RCOND = 1e-12
VARIANCE_FLOOR = 1e-12


@dataclass(frozen=True)
class SplitPlan:
    """Contiguous washout / train / test partition of a drive."""

    n_washout: int
    n_train: int
    n_test: int

    def __post_init__(self):
        if min(self.n_washout, self.n_train, self.n_test) < 0:
            raise ArgumentError("split sizes must be >= 0")

    @property
    def total(self) -> int:
        return self.n_washout + self.n_train + self.n_test

    @property
    def train_slice(self) -> slice:
        return slice(self.n_washout, self.n_washout + self.n_train)

    @property
    def test_slice(self) -> slice:
        return slice(self.n_washout + self.n_train, self.total)


@dataclass(frozen=True)
class ReadoutModel:
    """Trained affine map y = rows @ weights + bias."""

    weights: np.ndarray = field(repr=False)
    bias: float = 0.0

    def __post_init__(self):
        self.weights.flags.writeable = False


@dataclass(frozen=True)
class Score:
    """Per-sample covariances with their mean and standard error."""

    values: np.ndarray = field(repr=False)
    mean: float = 0.0
    stderr: float = 0.0

    @classmethod
    def from_values(cls, values) -> "Score":
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            raise ArgumentError("need at least one score")
        stderr = 0.0
        if values.size > 1:
            stderr = float(values.std(ddof=1) / np.sqrt(values.size))
        return cls(values=values, mean=float(values.mean()), stderr=stderr)


def train(rows: np.ndarray, targets: np.ndarray, ridge: float = 0.0) -> ReadoutModel:
    """Fit weights and bias minimizing ||rows@W + b - targets||^2 + ridge*||W||^2.

    Solved by SVD-based least squares with relative cutoff 1e-12; the
    ridge penalty is applied through row augmentation and never touches
    the bias.
    """
    rows = np.asarray(rows, dtype=float)
    targets = np.asarray(targets, dtype=float)
    if rows.ndim != 2:
        raise ArgumentError(f"rows must be 2-D, got shape {rows.shape}")
    if rows.shape[0] == 0:
        raise ArgumentError("empty training set")
    if rows.shape[0] != targets.size:
        raise ArgumentError(
            f"{rows.shape[0]} rows vs {targets.size} targets"
        )
    if ridge < 0.0:
        raise ArgumentError(f"ridge={ridge} must be >= 0")

    n, n_features = rows.shape
    if n < n_features + 1:
        warnings.warn(
            f"{n} training rows for {n_features}+1 parameters; fit is underdetermined",
            stacklevel=2,
        )
    design = np.hstack([rows, np.ones((n, 1))])
    rhs = targets
    if ridge > 0.0:
        penalty = np.hstack(
            [np.sqrt(ridge) * np.eye(n_features), np.zeros((n_features, 1))]
        )
        design = np.vstack([design, penalty])
        rhs = np.concatenate([targets, np.zeros(n_features)])
    solution = np.linalg.lstsq(design, rhs, rcond=LSTSQ_RCOND)[0]
    return ReadoutModel(weights=solution[:-1], bias=float(solution[-1]))


def predict(model: ReadoutModel, rows: np.ndarray) -> np.ndarray:
    """Apply the affine readout to each row."""
    rows = np.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != model.weights.size:
        raise ArgumentError(
            f"rows of width {model.weights.size} required, got shape {rows.shape}"
        )
    return rows @ model.weights + model.bias


def normalized_covariance(y_true: np.ndarray, y_pred: np.ndarray) -> float:
    """Pearson-form cov(y_true, y_pred) / (sigma_true * sigma_pred).

    Raises DegenerateVarianceError when either side is (numerically)
    constant — the score is undefined there, not zero.
    """
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    if y_true.size != y_pred.size:
        raise ArgumentError(f"{y_true.size} true vs {y_pred.size} predicted")
    if y_true.size < 2:
        raise ArgumentError("need at least two points to correlate")

    d_true = y_true - y_true.mean()
    d_pred = y_pred - y_pred.mean()
    sq_true = d_true @ d_true
    sq_pred = d_pred @ d_pred
    n = y_true.size
    if np.sqrt(sq_true / n) < VARIANCE_FLOOR or np.sqrt(sq_pred / n) < VARIANCE_FLOOR:
        raise DegenerateVarianceError(
            "standard deviation below 1e-12; covariance undefined"
        )
    return float((d_true @ d_pred) / np.sqrt(sq_true * sq_pred))
