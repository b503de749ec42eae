"""Deterministic seeded randomness (splitmix64).

Every randomized search in the package draws from this generator so that
a run is reproducible from its 64-bit seed alone, independently of the
platform's hashing or the stdlib random module.
"""

MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 with the standard gamma and mixing constants."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = (MASK64 + 1) - (MASK64 + 1) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())
