"""Disordered long-range transverse-field Ising chain construction.

H = sum_{i<j} J_ij X_i X_j + (1/2) sum_i (B + phi_i) Z_i, with power-law
couplings J_ij = J0 |i-j|^-alpha and random fields phi_i drawn uniformly
from (-W/2, W/2).  The coupling J0 is the energy unit (1 in all presets)
and kept as a parameter for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, CapacityError
from .qstate import MAX_QUBITS
from .rng import SplitMix64


@dataclass(frozen=True)
class ChainParams:
    """Hamiltonian family parameters plus the disorder seed."""

    n_qubits: int
    alpha: float
    disorder_w: float
    field_b: float = 4.0
    j0: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ArgumentError(f"n_qubits={self.n_qubits} must be >= 2")
        if self.alpha < 0:
            raise ArgumentError(f"alpha={self.alpha} must be >= 0")
        if self.disorder_w < 0:
            raise ArgumentError(f"disorder_w={self.disorder_w} must be >= 0")


@dataclass(frozen=True)
class SpinChainSpec:
    """One disorder realization: random fields and the coupling table."""

    params: ChainParams
    fields_random: np.ndarray = field(repr=False)  # (N,) phi_i
    couplings: np.ndarray = field(repr=False)      # (N, N) upper triangular J_ij

    def __post_init__(self):
        self.fields_random.flags.writeable = False
        self.couplings.flags.writeable = False

    @property
    def n_qubits(self) -> int:
        return self.params.n_qubits


def sample_disorder(params: ChainParams) -> SpinChainSpec:
    """Draw one disorder realization, deterministic in params.seed.

    phi_i = W * (u_i - 1/2) with u_i the i-th SplitMix64 uniform of the
    stream seeded by params.seed; J_ij filled from the power law.
    """
    n = params.n_qubits
    rng = SplitMix64(params.seed)
    phis = params.disorder_w * (rng.uniforms(n) - 0.5)
    couplings = np.zeros((n, n))
    for i in range(n - 1):
        dist = np.arange(1, n - i, dtype=np.float64)
        couplings[i, i + 1:] = params.j0 * dist ** (-params.alpha)
    return SpinChainSpec(params=params, fields_random=phis, couplings=couplings)


def build_hamiltonian(spec: SpinChainSpec) -> np.ndarray:
    """Dense 2^N x 2^N Hamiltonian matrix for one disorder realization.

    Real symmetric: X_i X_j terms are permutations (flip bits i and j)
    and the field term is diagonal, so the matrix is filled in O(N^2 2^N)
    without forming tensor-product factors.
    """
    n = spec.n_qubits
    if n > MAX_QUBITS:
        raise CapacityError(f"n_qubits={n} above dense-matrix cap {MAX_QUBITS}")
    dim = 1 << n
    h = np.zeros((dim, dim))
    idx = np.arange(dim)

    for i in range(n):
        for j in range(i + 1, n):
            mask = (1 << (n - 1 - i)) | (1 << (n - 1 - j))
            h[idx, idx ^ mask] += spec.couplings[i, j]

    diag = np.zeros(dim)
    for i in range(n):
        signs = 1.0 - 2.0 * ((idx >> (n - 1 - i)) & 1)
        diag += (0.5 * (spec.params.field_b + spec.fields_random[i])) * signs
    h[idx, idx] += diag
    return h
