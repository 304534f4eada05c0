"""Deterministic 64-bit generator with per-trial streams.

The generator is SplitMix64. A trial stream is derived statelessly from
(master, stream): the trial seed is the ``stream``-th output of a SplitMix64
sequence started at ``master``, which is a closed-form mix, so constructing
trial generators requires no jumping or shared state. Identical (master,
stream) pairs always yield identical draw sequences, independent of thread or
process scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 output scrambler applied to a 64-bit value."""
    z = x & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class Seed:
    """Master seed plus a trial index; fully determines one trial's randomness."""

    master: int
    stream: int = 0

    def __post_init__(self):
        if self.stream < 0:
            raise ValueError("stream index must be non-negative")


class SplitMix64:
    """SplitMix64 sequence; ``next_u64`` steps the state by the golden gamma."""

    __slots__ = ("_state",)

    def __init__(self, state: int):
        self._state = state & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return mix64(self._state)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound), bias-free via rejection sampling.

        bound == 1 consumes no entropy, so draw counts depend only on the
        requested bounds.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def trial_state(master: int, stream: int) -> int:
    """Seed state for trial ``stream``: the stream-th SplitMix64 output of master."""
    return mix64((master + _GAMMA * (stream + 1)) & _MASK64)


def rng_for_seed(seed: Seed) -> SplitMix64:
    """Fresh generator for one trial, a pure function of (master, stream)."""
    return SplitMix64(trial_state(seed.master, seed.stream))
