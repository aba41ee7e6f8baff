"""Exact propagators and Heisenberg-picture measurement caching.

For each disorder realization the Hamiltonian is eigendecomposed once;
the subinterval propagator U_sub = exp(-i H tau/V) and the evolved
Pauli-X observables X_i(v tau/V) = U_sub^-v X_i U_sub^v are cached.
Measuring all V x N subinterval signals then costs O(V N D^2) per input
step instead of O(V D^3), with the single O(D^3) full-step evolution
U_tau = exp(-i H tau) applied once per step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chain import SpinChainSpec, build_hamiltonian
from .errors import ArgumentError, NumericalDriftError, NumericalError
from .qstate import pauli_embed

UNITARITY_ATOL = 1e-10
SIGNAL_DRIFT_ATOL = 1e-9


@dataclass(frozen=True)
class EvolutionPlan:
    """Cached propagators and evolved observables for one realization."""

    tau: float
    subintervals: int
    n_qubits: int
    u_sub: np.ndarray = field(repr=False)        # (D, D) exp(-i H tau/V)
    u_tau: np.ndarray = field(repr=False)        # (D, D) exp(-i H tau)
    heisenberg_x: np.ndarray = field(repr=False)  # (V, N, D, D), entry (v-1, i-1) = X_i(v tau/V)

    def __post_init__(self):
        self.u_sub.flags.writeable = False
        self.u_tau.flags.writeable = False
        self.heisenberg_x.flags.writeable = False

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    @property
    def features_per_step(self) -> int:
        return self.subintervals * self.n_qubits


def make_plan(spec: SpinChainSpec, tau: float, subintervals: int) -> EvolutionPlan:
    """Eigendecompose H and cache all propagators and evolved observables."""
    if tau <= 0:
        raise ArgumentError(f"tau={tau} must be positive")
    if subintervals < 1:
        raise ArgumentError(f"subintervals={subintervals} must be >= 1")

    h = build_hamiltonian(spec)
    if not np.isfinite(h).all():
        raise NumericalError("Hamiltonian contains non-finite entries")
    try:
        eigvals, eigvecs = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"eigendecomposition failed (dim={h.shape[0]}, "
            f"max|H|={np.abs(h).max():.3e}): {exc}"
        ) from exc

    n = spec.n_qubits
    v_count = subintervals
    phases_sub = np.exp(-1j * eigvals * (tau / v_count))
    u_sub = (eigvecs * phases_sub) @ eigvecs.conj().T
    u_tau = (eigvecs * np.exp(-1j * eigvals * tau)) @ eigvecs.conj().T

    unit_dev = np.abs(u_sub.conj().T @ u_sub - np.eye(h.shape[0])).max()
    if unit_dev > UNITARITY_ATOL:
        raise NumericalError(f"subinterval propagator unitarity deviation {unit_dev:.3e}")

    u_sub_dag = u_sub.conj().T
    xs = [pauli_embed("X", i, n).astype(complex) for i in range(1, n + 1)]
    heisenberg = np.empty((v_count, n, h.shape[0], h.shape[0]), dtype=complex)
    current = list(xs)
    for v in range(v_count):
        for i in range(n):
            current[i] = u_sub_dag @ current[i] @ u_sub
            heisenberg[v, i] = current[i]

    herm_dev = np.abs(heisenberg - heisenberg.conj().transpose(0, 1, 3, 2)).max()
    if herm_dev > UNITARITY_ATOL:
        raise NumericalError(f"evolved observable hermiticity deviation {herm_dev:.3e}")
    trace_dev = np.abs(np.trace(heisenberg, axis1=2, axis2=3)).max()
    if trace_dev > 1e-9:
        raise NumericalError(f"evolved observable trace deviation {trace_dev:.3e}")

    return EvolutionPlan(
        tau=tau,
        subintervals=v_count,
        n_qubits=n,
        u_sub=u_sub,
        u_tau=u_tau,
        heisenberg_x=heisenberg,
    )


def evolve_full_step(rho: np.ndarray, plan: EvolutionPlan) -> np.ndarray:
    """Advance a density matrix by one full duration: U_tau rho U_tau†."""
    if rho.shape != (plan.dim, plan.dim):
        raise ArgumentError(f"state shape {rho.shape} does not match plan dim {plan.dim}")
    return plan.u_tau @ rho @ plan.u_tau.conj().T


def measure_subintervals(rho: np.ndarray, plan: EvolutionPlan) -> np.ndarray:
    """All subinterval Pauli-X signals of the current step, shape (V, N).

    Entry (v-1, i-1) is (1 + Tr[rho X_i(v tau/V)]) / 2, evaluated in the
    Heisenberg picture so rho itself is never propagated here.  Entries
    may drift outside [0, 1] by at most 1e-9 and are clipped back; larger
    excursions raise instead of being hidden.
    """
    if rho.shape != (plan.dim, plan.dim):
        raise ArgumentError(f"state shape {rho.shape} does not match plan dim {plan.dim}")
    v_count, n = plan.subintervals, plan.n_qubits
    flat_obs = plan.heisenberg_x.reshape(v_count * n, plan.dim * plan.dim)
    # Tr[rho A] = sum_ij rho_ij A_ji = vec(A) . conj(vec(rho)) for Hermitian rho
    traces = (flat_obs @ np.conj(rho.ravel())).real
    signals = 0.5 * (1.0 + traces)
    low, high = signals.min(), signals.max()
    if low < -SIGNAL_DRIFT_ATOL or high > 1.0 + SIGNAL_DRIFT_ATOL:
        raise NumericalDriftError(
            f"signal outside [0,1] beyond drift tolerance: min={low:.3e}, max={high:.3e}"
        )
    return np.clip(signals, 0.0, 1.0).reshape(v_count, n)
