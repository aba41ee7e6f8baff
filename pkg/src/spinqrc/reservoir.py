"""The reservoir drive loop: inject, harvest subinterval signals, evolve.

Each input step k overwrites the first qubit with the input state, reads
out all V x N subinterval Pauli-X signals (optionally adding uniform
white noise), applies the full-step propagator, and re-Hermitizes once.
Rows are flattened v-major: column (v-1)*N + (i-1) holds subinterval v
of qubit i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, CapacityError
from .evolve import EvolutionPlan, evolve_full_step, measure_subintervals
from .qstate import MAX_QUBITS, inject_first, rehermitize
from .readout import ReadoutModel
from .rng import SplitMix64


@dataclass(frozen=True)
class SignalMatrix:
    """Measured reservoir outputs, one row per input step."""

    entries: np.ndarray = field(repr=False)  # (n_steps, V*N) float64
    n_qubits: int = 0
    subintervals: int = 0
    noise_sigma: float = 0.0

    def __post_init__(self):
        self.entries.flags.writeable = False
        lo = -self.noise_sigma
        hi = 1.0 + self.noise_sigma
        if self.entries.size and (self.entries.min() < lo or self.entries.max() > hi):
            raise ArgumentError(f"signal entries escape [{lo}, {hi}]")

    @property
    def n_steps(self) -> int:
        return self.entries.shape[0]

    @property
    def features_per_step(self) -> int:
        return self.subintervals * self.n_qubits


def initial_state(n_qubits: int) -> np.ndarray:
    """Infinite-temperature state I / 2^N."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(f"n_qubits={n_qubits} outside [1, {MAX_QUBITS}]")
    dim = 1 << n_qubits
    return np.eye(dim, dtype=complex) / dim


def _drive_step(rho, s, plan, rng, sigma):
    rho = inject_first(rho, s)
    row = measure_subintervals(rho, plan).ravel()
    if sigma > 0.0:
        row = row + sigma * (2.0 * rng.uniforms(row.size) - 1.0)
    rho = evolve_full_step(rho, plan)
    return rehermitize(rho), row


def drive(
    plan: EvolutionPlan,
    inputs: np.ndarray,
    noise_sigma: float = 0.0,
    noise_seed: int = 0,
) -> SignalMatrix:
    """Run the open-loop protocol over an input sequence.

    Starts from the infinite-temperature state; deterministic given
    (plan, inputs, noise_seed), and independent of noise_seed when
    noise_sigma is zero.
    """
    inputs = np.asarray(inputs, dtype=float)
    if inputs.size and (inputs.min() < 0.0 or inputs.max() > 1.0):
        raise ArgumentError("inputs must lie in [0, 1]")
    if noise_sigma < 0.0:
        raise ArgumentError(f"noise_sigma={noise_sigma} must be >= 0")

    rng = SplitMix64(noise_seed)
    rho = initial_state(plan.n_qubits)
    rows = np.empty((inputs.size, plan.features_per_step))
    for k, s in enumerate(inputs):
        rho, rows[k] = _drive_step(rho, float(s), plan, rng, noise_sigma)
    return SignalMatrix(
        entries=rows,
        n_qubits=plan.n_qubits,
        subintervals=plan.subintervals,
        noise_sigma=noise_sigma,
    )


def drive_closed_loop(
    plan: EvolutionPlan,
    model: ReadoutModel,
    warm_inputs: np.ndarray,
    horizon: int,
    noise_sigma: float = 0.0,
    noise_seed: int = 0,
) -> np.ndarray:
    """Autonomous prediction: drive open loop, then feed outputs back.

    After the warm drive, the readout's prediction on the final warm row
    seeds the loop; each of the `horizon` steps injects the previous
    prediction clamped to [0, 1] and predicts from the fresh signals.
    The noise stream continues seamlessly from the warm phase.
    """
    if horizon < 1:
        raise ArgumentError(f"horizon={horizon} must be >= 1")
    warm_inputs = np.asarray(warm_inputs, dtype=float)
    if warm_inputs.size < 1:
        raise ArgumentError("closed-loop drive needs at least one warm input")
    if warm_inputs.min() < 0.0 or warm_inputs.max() > 1.0:
        raise ArgumentError("warm inputs must lie in [0, 1]")
    if model.weights.size != plan.features_per_step:
        raise ArgumentError(
            f"model width {model.weights.size} != plan features {plan.features_per_step}"
        )
    if noise_sigma < 0.0:
        raise ArgumentError(f"noise_sigma={noise_sigma} must be >= 0")

    rng = SplitMix64(noise_seed)
    rho = initial_state(plan.n_qubits)
    row = None
    for s in warm_inputs:
        rho, row = _drive_step(rho, float(s), plan, rng, noise_sigma)

    y = float(row @ model.weights + model.bias)
    predictions = np.empty(horizon)
    for j in range(horizon):
        s = min(max(y, 0.0), 1.0)
        rho, row = _drive_step(rho, s, plan, rng, noise_sigma)
        y = float(row @ model.weights + model.bias)
        predictions[j] = y
    return predictions
