"""Deterministic randomness plumbing.

Every stream is a PCG64 generator keyed by an integer seed plus an optional
derivation path, so repeated roundings and parallel workers can use provably
independent sub-streams: ``make_rng(seed, k)`` is the stream for repeat ``k``.
"""

from __future__ import annotations

import numpy as np

_U64 = (1 << 64) - 1


def _entropy(seed, path):
    return [int(seed) & _U64] + [int(p) & _U64 for p in path]


def make_rng(seed, *path) -> np.random.Generator:
    """PCG64 generator for (seed, *path); same inputs give the same stream."""
    return np.random.default_rng(np.random.SeedSequence(_entropy(seed, path)))


def derive_seed(seed, *path) -> int:
    """Stable 64-bit sub-seed for (seed, *path)."""
    ss = np.random.SeedSequence(_entropy(seed, path))
    return int(ss.generate_state(1, np.uint64)[0])
