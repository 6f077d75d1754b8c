"""SplitMix64 random streams.

Each random trial gets its own stream, seeded by ``seed ^ (index * GAMMA)``,
so a trial's operands depend only on (seed, index) and never on which worker
evaluated it or in what order.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound), by reduction modulo bound."""
        return self.next_u64() % bound

    def between(self, low: int, high: int) -> int:
        """Integer in the closed range [low, high]."""
        return low + self.below(high - low + 1)


def substream(seed: int, index: int) -> SplitMix64:
    return SplitMix64(seed ^ ((index * GOLDEN_GAMMA) & MASK64))
