"""Deterministic counter-based pseudo-random streams (SplitMix64).

The verification harness promises that a (seed, property, index) triple
reproduces the exact same instance in any implementation, so the generator
is pinned to a published algorithm instead of a library default:

* state update: ``state += 0x9E3779B97F4A7C15  (mod 2^64)``
* output: the SplitMix64 finalizer ``mix64`` applied to the new state
  (xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift 27, multiply
  0x94D049BB133111EB, xor-shift 31)

Derived streams: ``stream(seed, *labels)`` folds each label into the state
with ``state = mix64(state ^ H(label))`` starting from ``state =
mix64(seed)``, where ``H`` is FNV-1a 64 over UTF-8 for strings and
``mix64(label)`` for integers.  Bounded draws use plain modulo: the tiny
bias is irrelevant for test-instance generation and keeps the recipe
portable.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & MASK64
    return h


def _label_hash(label: int | str) -> int:
    if isinstance(label, str):
        return fnv1a64(label.encode("utf-8"))
    return mix64(label & MASK64)


class SplitMix64:
    """Minimal SplitMix64 generator over 64-bit state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def randint(self, lo: int, hi: int) -> int:
        """Inclusive range draw."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def split(self) -> "SplitMix64":
        """Independent child stream seeded from the next output."""
        return SplitMix64(self.next_u64())


def stream(seed: int, *labels: int | str) -> SplitMix64:
    """Derive a deterministic stream from a seed and a label path."""
    state = mix64(seed & MASK64)
    for label in labels:
        state = mix64(state ^ _label_hash(label))
    return SplitMix64(state)
