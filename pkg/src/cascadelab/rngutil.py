"""Deterministic seed derivation and buffered uniform draws.

All randomized stages consume a ``numpy.random.PCG64`` stream whose seed is
derived with :func:`mix64`, a fixed splitmix64 chain.  Because the derivation
depends only on (base seed, stage tag, indices), results are independent of
scheduling and worker count.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1

# Domain-separation tags for the per-stage streams of one simulation run.
TAG_GRAPH = 0x9F4F_1F3B_5D21_8E11
TAG_PLANT = 0x4E0C_7D39_A6B2_51C7
TAG_SELECT = 0xC2B8_2A0D_93E5_7F63
TAG_CASCADE = 0x7A11_D5C9_0F38_B2A5


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def mix64(*parts: int) -> int:
    """Fold integers into one 64-bit seed via a splitmix64 chain."""
    if not parts:
        raise ValueError("mix64 needs at least one part")
    h = splitmix64(parts[0] & _MASK)
    for p in parts[1:]:
        h = splitmix64(h ^ (p & _MASK))
    return h


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


class DoubleStream:
    """Buffered uniform doubles off a PCG64 stream.

    Consumes the bit generator exactly like repeated scalar
    ``Generator.random()`` calls (one ``next_double`` per value), so the
    pure-Python kernels see the same stream as the C kernels, which pull
    ``next_double`` straight from the same bit generator.
    """

    __slots__ = ("_gen", "_buf", "_pos", "_chunk")

    def __init__(self, seed: int, chunk: int = 4096):
        self._gen = generator(seed)
        self._buf: list[float] = []
        self._pos = 0
        self._chunk = chunk

    def next(self) -> float:
        if self._pos >= len(self._buf):
            self._buf = self._gen.random(self._chunk).tolist()
            self._pos = 0
        u = self._buf[self._pos]
        self._pos += 1
        return u
