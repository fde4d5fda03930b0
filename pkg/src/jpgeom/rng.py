"""Seeded 64-bit linear congruential generator.

state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64, and
randint(lo, hi) = lo + (state' >> 33) mod (hi - lo + 1).  The constants
are Knuth's MMIX ones; the formula is fixed so that reports can be
reproduced by other implementations from the seed alone.
"""

from __future__ import annotations

_A = 6364136223846793005
_C = 1442695040888963407
_MASK = (1 << 64) - 1


class LCG:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (_A * self.state + _C) & _MASK
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (inclusive)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def vector(self, n: int, lo: int = -2, hi: int = 2) -> tuple[int, ...]:
        return tuple(self.randint(lo, hi) for _ in range(n))
