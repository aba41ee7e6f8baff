"""Counter-based random number generation with a documented algorithm.

All randomness in the package (disorder fields, binary input strings,
measurement noise) flows through SplitMix64 so that any implementation
with 64-bit integer arithmetic can reproduce the exact streams from
(master_seed, stream tag, sample index) alone.

SplitMix64 (Steele, Lea & Flood 2014): the k-th state is
``seed + k * 0x9E3779B97F4A7C15 mod 2^64`` and each output is the state
passed through the murmur-style finalizer in :func:`mix64`.  Uniform
variates on [0, 1) take the top 53 bits scaled by 2^-53.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MUL_1 = 0xBF58476D1CE4E5B9
_MIX_MUL_2 = 0x94D049BB133111EB
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3

_U53_SCALE = 2.0 ** -53


def mix64(z: int) -> int:
    """SplitMix64 output finalizer on a 64-bit integer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MUL_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MUL_2) & _MASK64
    return z ^ (z >> 31)


def fnv1a64(text: str) -> int:
    """FNV-1a 64-bit hash of a UTF-8 string, used for stream tags."""
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def derive_seed(master_seed: int, stream: str, index: int) -> int:
    """Derive an independent 64-bit stream seed from (master, tag, index).

    Defined as ``mix64(mix64(master ^ fnv1a64(stream)) ^ index)``; the
    double finalizer ensures full avalanche between consecutive indices.
    """
    base = mix64((master_seed & _MASK64) ^ fnv1a64(stream))
    return mix64(base ^ (index & _MASK64))


class SplitMix64:
    """Sequential generator facade over the counter-based recurrence."""

    def __init__(self, seed: int):
        self._seed = seed & _MASK64
        self._count = 0

    def next_u64(self) -> int:
        self._count += 1
        state = (self._seed + self._count * GOLDEN_GAMMA) & _MASK64
        return mix64(state)

    def uniform(self) -> float:
        """One double on [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * _U53_SCALE

    def uniforms(self, n: int) -> np.ndarray:
        """Vectorized draw of ``n`` uniforms; identical to n calls of uniform()."""
        ks = np.arange(self._count + 1, self._count + n + 1, dtype=np.uint64)
        self._count += n
        z = np.uint64(self._seed) + np.uint64(GOLDEN_GAMMA) * ks
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_MUL_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_MUL_2)
        z = z ^ (z >> np.uint64(31))
        return (z >> np.uint64(11)).astype(np.float64) * _U53_SCALE
