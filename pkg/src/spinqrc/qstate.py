"""Dense operator algebra for small N-qubit systems.

Operators and density matrices are plain numpy arrays of shape
(2^n, 2^n); density matrices are complex128, Hermitian, unit-trace.
Site 1 is the leftmost (most significant) tensor factor everywhere, so
tracing out the first qubit is a contiguous-block sum.  Dense storage
caps the qubit count at :data:`MAX_QUBITS`.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ArgumentError, CapacityError, DegenerateStateError

MAX_QUBITS = 12

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])

HERMITICITY_ATOL = 1e-9
TRACE_ATOL = 1e-9
DIAG_NEG_ATOL = 1e-9


def n_qubits_of(rho: np.ndarray) -> int:
    """Number of qubits for a 2^n x 2^n matrix."""
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if rho.ndim != 2 or rho.shape != (dim, dim) or (1 << n) != dim:
        raise ArgumentError(f"matrix shape {rho.shape} is not square power-of-two")
    return n


def pauli_embed(kind: str, site: int, n_qubits: int) -> np.ndarray:
    """Single-site Pauli X or Z at `site` (1-based) embedded in n qubits.

    Returns the real dense matrix I x ... x P x ... x I with the Pauli at
    tensor slot `site`, slot 1 being the most significant factor.
    """
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(f"n_qubits={n_qubits} outside [1, {MAX_QUBITS}]")
    if not 1 <= site <= n_qubits:
        raise ArgumentError(f"site={site} outside [1, {n_qubits}]")
    dim = 1 << n_qubits
    bit = n_qubits - site  # bit position counted from the least significant end
    idx = np.arange(dim)
    op = np.zeros((dim, dim))
    kind = kind.upper()
    if kind == "X":
        op[idx, idx ^ (1 << bit)] = 1.0
    elif kind == "Z":
        op[idx, idx] = 1.0 - 2.0 * ((idx >> bit) & 1)
    else:
        raise ArgumentError(f"kind must be 'X' or 'Z', got {kind!r}")
    return op


def partial_trace_first(rho: np.ndarray) -> np.ndarray:
    """Trace out the first qubit of a density matrix."""
    n = n_qubits_of(rho)
    if n < 2:
        raise ArgumentError("partial_trace_first needs at least 2 qubits")
    half = 1 << (n - 1)
    blocks = rho.reshape(2, half, 2, half)
    return blocks[0, :, 0, :] + blocks[1, :, 1, :]


def inject_first(rho: np.ndarray, s: float) -> np.ndarray:
    """Overwrite the first qubit with |psi_s><psi_s|, keeping the rest.

    |psi_s> = sqrt(1-s)|+> + sqrt(s)|->, interpolating between the
    Pauli-X eigenstates; the remaining qubits keep their marginal.
    """
    if not 0.0 <= s <= 1.0:
        raise ArgumentError(f"input value s={s} outside [0, 1]")
    marginal = partial_trace_first(rho)
    a = math.sqrt(1.0 - s)
    b = math.sqrt(s)
    c0 = (a + b) / math.sqrt(2.0)
    c1 = (a - b) / math.sqrt(2.0)
    psi = np.array([c0, c1])
    return np.kron(np.outer(psi, psi), marginal)


def rehermitize(rho: np.ndarray) -> np.ndarray:
    """Project onto the Hermitian unit-trace manifold: (rho+rho†)/2, rescaled."""
    herm = 0.5 * (rho + rho.conj().T)
    tr = np.trace(herm).real
    if abs(tr) < 1e-12:
        raise DegenerateStateError(f"trace {tr} too small to renormalize")
    return herm / tr


def check_density_matrix(rho: np.ndarray) -> None:
    """Raise ArgumentError if rho violates the density-matrix invariants."""
    n_qubits_of(rho)
    herm_dev = np.abs(rho - rho.conj().T).max()
    if herm_dev > HERMITICITY_ATOL:
        raise ArgumentError(f"Hermiticity deviation {herm_dev:.3e}")
    tr_dev = abs(np.trace(rho) - 1.0)
    if tr_dev > TRACE_ATOL:
        raise ArgumentError(f"trace deviation {tr_dev:.3e}")
    diag_min = rho.diagonal().real.min()
    if diag_min < -DIAG_NEG_ATOL:
        raise ArgumentError(f"negative diagonal entry {diag_min:.3e}")
