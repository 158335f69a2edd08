"""Seeded 64-bit counter-based random generator (SplitMix64).

Chosen so resampling index sequences are reproducible from the seed alone,
across platforms and implementations. The full algorithm is documented in
the README: the k-th raw output (k >= 1) is ``mix64(seed + k * GAMMA)``
with GAMMA = 0x9E3779B97F4A7C15 and the standard SplitMix64 finalizer;
bounded draws take the raw output modulo the bound.

Independent substreams (one per bootstrap/protocol round) are generators
seeded with ``mix64(seed + (round + 1) * GAMMA)``, i.e. with the parent
stream's (round+1)-th raw output.
"""

from __future__ import annotations

_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: xor-shift / multiply avalanche of a 64-bit word."""
    z &= _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic stream of 64-bit words from one integer seed."""

    def __init__(self, seed: int):
        self._state = seed & _M64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _M64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform draw from [0, n) via modulo reduction."""
        if n <= 0:
            raise ValueError(f"bound must be positive, got {n}")
        return self.next_u64() % n

    def indices_with_replacement(self, n: int, k: int) -> list[int]:
        return [self.below(n) for _ in range(k)]

    def sample_without_replacement(self, n: int, k: int) -> list[int]:
        """First k entries of a partial Fisher-Yates shuffle of range(n)."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct items from {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def substream(seed: int, index: int) -> SplitMix64:
    """Independent generator for round ``index`` of a seeded procedure."""
    return SplitMix64(mix64((seed + (index + 1) * _GAMMA) & _M64))
