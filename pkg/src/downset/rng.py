from __future__ import annotations

import random

_MASK = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class SplitMix64(random.Random):
    """``random.Random`` driven by a SplitMix64 stream.

    Overriding ``random`` and ``getrandbits`` routes every derived method
    (randrange, sample, shuffle, choice) through the 64-bit stream, so a seed
    fixes all output.
    """

    def __init__(self, seed: int = 0):
        self._state = 0
        super().__init__(seed)

    def seed(self, a=0, version=2):
        self._state = int(a) & _MASK

    def next_u64(self) -> int:
        self._state, out = splitmix64(self._state)
        return out

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def getrandbits(self, k: int) -> int:
        if k < 0:
            raise ValueError("number of bits must be non-negative")
        out, have = 0, 0
        while have < k:
            out |= self.next_u64() << have
            have += 64
        return out & ((1 << k) - 1)

    def getstate(self):
        return self._state

    def setstate(self, state):
        self._state = state


def derive_seed(master: int, index: int) -> int:
    """Independent per-case seed from (master seed, case index)."""
    _, a = splitmix64(master & _MASK)
    _, b = splitmix64((a ^ (index * 0xD1B54A32D192ED03)) & _MASK)
    return b
