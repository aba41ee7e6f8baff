"""Benchmark input/target generators: delayed recall, sliding-window
parity, and one-step-ahead Mackey-Glass prediction.

All sequences are plain float64 arrays so they feed the drive loop and
the readout without conversion; binary sequences hold exact 0.0/1.0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, DegenerateSequenceError
from .rng import SplitMix64

MG_GAMMA = 0.9
MG_BETA = 10.0
MG_LAMBDA = 0.2
MG_DELAY = 17


@dataclass(frozen=True)
class MgSequence:
    """A Mackey-Glass trajectory window with its [0, 1] rescaling."""

    raw: np.ndarray = field(repr=False)
    normalized: np.ndarray = field(repr=False)
    f_min: float = 0.0
    f_max: float = 0.0

    def __post_init__(self):
        self.raw.flags.writeable = False
        self.normalized.flags.writeable = False

    @property
    def n_steps(self) -> int:
        return self.raw.size


def gen_binary_inputs(length: int, seed: int) -> np.ndarray:
    """Fair i.i.d. bits as 0.0/1.0, deterministic in the seed."""
    if length < 1:
        raise ArgumentError(f"length={length} must be >= 1")
    return (SplitMix64(seed).uniforms(length) >= 0.5).astype(float)


def stm_targets(inputs: np.ndarray, k_delta: int) -> np.ndarray:
    """Delayed recall: target at step k is the input k_delta steps back.

    History before the sequence start counts as zero, so the first
    k_delta targets are 0.
    """
    if k_delta < 0:
        raise ArgumentError(f"k_delta={k_delta} must be >= 0")
    inputs = np.asarray(inputs, dtype=float)
    targets = np.zeros_like(inputs)
    if k_delta < inputs.size:
        targets[k_delta:] = inputs[: inputs.size - k_delta]
    return targets


def pc_targets(inputs: np.ndarray, k_delta: int) -> np.ndarray:
    """Parity of the window covering the current and k_delta previous bits.

    Out-of-range history counts as zero; k_delta=0 is the identity.
    """
    if k_delta < 0:
        raise ArgumentError(f"k_delta={k_delta} must be >= 0")
    inputs = np.asarray(inputs)
    if not np.isin(inputs, (0, 1)).all():
        raise ArgumentError("parity targets need binary {0, 1} inputs")
    bits = inputs.astype(np.int64)
    running = np.concatenate(([0], np.cumsum(bits)))
    window_start = np.maximum(np.arange(bits.size) - k_delta, 0)
    window_sums = running[1:] - running[window_start]
    return (window_sums & 1).astype(float)


def gen_mackey_glass(
    length: int,
    k_delta: int = MG_DELAY,
    gamma: float = MG_GAMMA,
    beta: float = MG_BETA,
    lam: float = MG_LAMBDA,
    burn_in: int = 1000,
) -> MgSequence:
    """Iterate the discrete Mackey-Glass map and rescale a window to [0, 1].

    F_{k+1} = gamma*F_k + lam*F_{k-k_delta} / (1 + F_{k-k_delta}^beta),
    with constant history F_j = 0.5 for j <= 0.  The first `burn_in`
    iterates are discarded; min/max are taken over the returned window,
    so the normalized sequence attains 0 and 1 exactly.
    """
    if length < 1:
        raise ArgumentError(f"length={length} must be >= 1")
    if burn_in < 0:
        raise ArgumentError(f"burn_in={burn_in} must be >= 0")
    if k_delta < 0:
        raise ArgumentError(f"k_delta={k_delta} must be >= 0")
    if not 0.0 < gamma < 1.0:
        raise ArgumentError(f"gamma={gamma} must lie in (0, 1)")
    if lam < 0.0 or beta <= 0.0:
        raise ArgumentError("need lam >= 0 and beta > 0")

    total = burn_in + length
    values = np.empty(total + 1)
    values[0] = 0.5
    for k in range(total):
        delayed = values[k - k_delta] if k >= k_delta else 0.5
        values[k + 1] = gamma * values[k] + lam * delayed / (1.0 + delayed**beta)

    raw = values[burn_in + 1 :].copy()
    f_min = float(raw.min())
    f_max = float(raw.max())
    if f_max - f_min < 1e-12:
        raise DegenerateSequenceError(
            f"trajectory range {f_max - f_min:.3e} too small to normalize"
        )
    normalized = (raw - f_min) / (f_max - f_min)
    return MgSequence(raw=raw, normalized=normalized, f_min=f_min, f_max=f_max)
