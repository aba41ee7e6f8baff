"""Quantum reservoir computing on disordered long-range Ising chains.

Spin-chain reservoirs driven by classical input sequences, linear
readouts scored by normalized covariance, and out-of-time-order
correlators for locating the ergodic/localized crossover.
"""

from .chain import ChainParams, SpinChainSpec, build_hamiltonian, sample_disorder
from .errors import (
    ArgumentError,
    CapacityError,
    ConfigError,
    DegenerateSequenceError,
    DegenerateStateError,
    DegenerateVarianceError,
    NumericalDriftError,
    NumericalError,
    SpinQrcError,
)
from .evolve import EvolutionPlan, evolve_full_step, make_plan, measure_subintervals
from .otoc import OtocCurve, otoc_at, otoc_curve
from .qstate import (
    MAX_QUBITS,
    check_density_matrix,
    inject_first,
    partial_trace_first,
    pauli_embed,
    rehermitize,
)
from .readout import (
    ReadoutModel,
    Score,
    SplitPlan,
    normalized_covariance,
    predict,
    train,
)
from .reservoir import SignalMatrix, drive, drive_closed_loop, initial_state
from .rng import SplitMix64, derive_seed
from .tasks import (
    MgSequence,
    gen_binary_inputs,
    gen_mackey_glass,
    pc_targets,
    stm_targets,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "CapacityError",
    "ChainParams",
    "ConfigError",
    "DegenerateSequenceError",
    "DegenerateStateError",
    "DegenerateVarianceError",
    "EvolutionPlan",
    "MAX_QUBITS",
    "MgSequence",
    "NumericalDriftError",
    "NumericalError",
    "OtocCurve",
    "ReadoutModel",
    "Score",
    "SignalMatrix",
    "SpinChainSpec",
    "SpinQrcError",
    "SplitMix64",
    "SplitPlan",
    "build_hamiltonian",
    "check_density_matrix",
    "derive_seed",
    "drive",
    "drive_closed_loop",
    "evolve_full_step",
    "gen_binary_inputs",
    "gen_mackey_glass",
    "initial_state",
    "inject_first",
    "make_plan",
    "measure_subintervals",
    "normalized_covariance",
    "otoc_at",
    "otoc_curve",
    "partial_trace_first",
    "pauli_embed",
    "pc_targets",
    "predict",
    "rehermitize",
    "sample_disorder",
    "stm_targets",
    "train",
]
