"""SplitMix64, a small portable generator.

State advances by 0x9E3779B97F4A7C15 per draw; the output mix uses the
multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
The same seed gives the same stream on every platform, which keeps generated
update sequences reproducible outside Python.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), without modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next()
            if r < limit:
                return r % bound
