"""Counter-based pseudo-random stream for the seeded verification sweeps.

Word i of the stream with seed s is splitmix64's finalizer applied to
s + (i+1) * 0x9E3779B97F4A7C15, all mod 2^64; draws below a bound reduce
the word modulo the bound.  The construction is spelled out so that any
implementation, in any language, reproduces the identical sample set from
the same seed (statistical quality is a non-goal; reproducibility is the
point).
"""

from __future__ import annotations

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def word(seed: int, index: int) -> int:
    return mix64((seed + (index + 1) * _GOLDEN) & _MASK)


class CounterRng:
    """Deterministic stream of 64-bit words; below(b) draws from [0, b)."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self.index = 0

    def next_word(self) -> int:
        w = word(self.seed, self.index)
        self.index += 1
        return w

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_word() % bound
