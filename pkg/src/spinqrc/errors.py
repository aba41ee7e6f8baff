"""Exception types shared across the package."""


class SpinQrcError(Exception):
    """Base class for all package-specific errors."""


class ArgumentError(SpinQrcError, ValueError):
    """An argument violates a documented precondition."""


class CapacityError(SpinQrcError):
    """Requested system size exceeds the dense-matrix ceiling."""


class DegenerateStateError(SpinQrcError):
    """A density matrix has (numerically) vanishing trace."""


class DegenerateSequenceError(SpinQrcError):
    """A generated sequence has no usable dynamic range."""


class DegenerateVarianceError(SpinQrcError):
    """A score is undefined because one argument has ~zero variance."""


class NumericalError(SpinQrcError):
    """A numerical routine failed or produced out-of-tolerance results."""


class NumericalDriftError(NumericalError):
    """Accumulated floating-point drift exceeded a hard invariant."""


class ConfigError(SpinQrcError):
    """An experiment configuration is malformed or inconsistent."""
