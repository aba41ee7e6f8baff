"""Infinite-temperature out-of-time-order correlator of the first qubit
against the rest of the chain, and the threshold-crossing time extracted
from a curve over evolution times.

O(tau) = 1 - (1/(N-1)) * sum_{i=2}^N Tr[X_1(tau) X_i X_1(tau) X_i] / 2^N
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chain import SpinChainSpec, build_hamiltonian
from .errors import ArgumentError, NumericalDriftError, NumericalError
from .qstate import pauli_embed

OTOC_IMAG_ATOL = 1e-9
OTOC_RANGE_ATOL = 1e-9
DEFAULT_THRESHOLD = 0.2


@dataclass(frozen=True)
class OtocCurve:
    """O(tau) sampled on an increasing grid, with its threshold crossing."""

    tau_grid: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    threshold: float = DEFAULT_THRESHOLD
    tau_threshold: float | None = None  # None = never crossed

    def __post_init__(self):
        self.tau_grid.flags.writeable = False
        self.values.flags.writeable = False


def _eigh_or_raise(hamiltonian: np.ndarray):
    try:
        return np.linalg.eigh(hamiltonian)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc


def _otoc_point(x_first, site_perms, eigvals, eigvecs, tau):
    """Mean conjugated trace at one time; exact at tau=0 by construction."""
    if tau == 0.0:
        x_evolved = x_first
    else:
        phases = np.exp(-1j * eigvals * tau)
        u_tau = (eigvecs * phases) @ eigvecs.conj().T
        x_evolved = u_tau.conj().T @ x_first @ u_tau
    dim = x_first.shape[0]
    total = 0j
    for perm in site_perms:
        conjugated = x_evolved[np.ix_(perm, perm)]
        total += (x_evolved * conjugated.T).sum()
    return total / (len(site_perms) * dim)


def _site_permutations(n_qubits: int) -> list[np.ndarray]:
    """Index permutations realizing X_i . X_i for sites i = 2..N."""
    indices = np.arange(1 << n_qubits)
    return [indices ^ (1 << (n_qubits - site)) for site in range(2, n_qubits + 1)]


def _finalize(mean_trace: complex) -> float:
    if abs(mean_trace.imag) > OTOC_IMAG_ATOL:
        raise NumericalError(
            f"imaginary residue {mean_trace.imag:.3e} exceeds {OTOC_IMAG_ATOL}"
        )
    value = 1.0 - mean_trace.real
    if not -OTOC_RANGE_ATOL <= value <= 2.0 + OTOC_RANGE_ATOL:
        raise NumericalDriftError(f"OTOC value {value} escapes [0, 2]")
    return value


def otoc_at(spec: SpinChainSpec, tau: float) -> float:
    """Evaluate the correlator for one chain realization at one time."""
    if tau < 0.0:
        raise ArgumentError(f"tau={tau} must be >= 0")
    n = spec.n_qubits
    eigvals, eigvecs = _eigh_or_raise(build_hamiltonian(spec))
    x_first = pauli_embed("x", 1, n).astype(complex)
    mean_trace = _otoc_point(x_first, _site_permutations(n), eigvals, eigvecs, tau)
    return _finalize(mean_trace)


def otoc_curve(
    spec: SpinChainSpec,
    tau_grid: np.ndarray,
    threshold: float = DEFAULT_THRESHOLD,
) -> OtocCurve:
    """Evaluate O(tau) on a grid (one shared eigendecomposition) and find
    where the curve first reaches the threshold, linearly interpolated."""
    grid = np.asarray(tau_grid, dtype=float)
    if grid.size == 0:
        raise ArgumentError("tau grid is empty")
    if grid.min() < 0.0:
        raise ArgumentError("tau grid must be nonnegative")
    if grid.size > 1 and (np.diff(grid) <= 0).any():
        raise ArgumentError("tau grid must be strictly increasing")

    n = spec.n_qubits
    eigvals, eigvecs = _eigh_or_raise(build_hamiltonian(spec))
    x_first = pauli_embed("x", 1, n).astype(complex)
    perms = _site_permutations(n)
    values = np.array(
        [_finalize(_otoc_point(x_first, perms, eigvals, eigvecs, t)) for t in grid]
    )
    return OtocCurve(
        tau_grid=grid,
        values=values,
        threshold=threshold,
        tau_threshold=rising_crossing(grid, values, threshold),
    )


def rising_crossing(grid: np.ndarray, values: np.ndarray, threshold: float):
    """First time the curve reaches the threshold from below.

    Returns the first grid point if the curve starts at or above the
    threshold, a linear interpolation between the bracketing pair
    otherwise, and None when the threshold is never reached.
    """
    if values[0] >= threshold:
        return float(grid[0])
    for j in range(1, len(values)):
        if values[j] >= threshold:
            lo, hi = values[j - 1], values[j]
            frac = (threshold - lo) / (hi - lo)
            return float(grid[j - 1] + frac * (grid[j] - grid[j - 1]))
    return None
