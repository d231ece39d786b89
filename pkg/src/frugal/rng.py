"""Seeded random streams.

Every randomized routine in the package draws from NumPy's Philox4x64-10
counter-based bit generator, seeded through ``numpy.random.SeedSequence``
from a single non-negative integer. Both the bit generator and the seed
expansion are fully specified by NumPy, so a given seed reproduces the same
stream on every platform.
"""
from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


class IntStream:
    """Uniform draws from ``range(k)`` served from pre-generated blocks.

    The block size is part of the stream definition (NumPy may discard
    unused bits at the end of a call), so keep the default for reproducible
    runs.
    """

    def __init__(self, rng: np.random.Generator, k: int, block: int = 4096):
        self._rng = rng
        self._k = k
        self._block = block
        self._buf: list[int] = []
        self._pos = 0

    def take(self, count: int) -> list[int]:
        out = []
        while count:
            if self._pos == len(self._buf):
                self._buf = self._rng.integers(self._k, size=self._block).tolist()
                self._pos = 0
            step = min(count, len(self._buf) - self._pos)
            out.extend(self._buf[self._pos:self._pos + step])
            self._pos += step
            count -= step
        return out
