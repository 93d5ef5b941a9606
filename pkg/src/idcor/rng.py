"""Deterministic random number plumbing.

All randomness in the library flows through 64-bit integer seeds.  A seed
plus identical inputs yields a bit-identical stream of draws (numpy PCG64).
Independent sub-streams (one per permutation sample, per column, ...) are
derived with splitmix64 so results do not depend on evaluation order.
"""
from __future__ import annotations

import numpy as np

from .errors import InputError

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)):
        raise InputError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= int(seed) <= _MASK64:
        raise InputError(f"seed must fit in 64 unsigned bits, got {seed}")
    return int(seed)


def splitmix64(state: int) -> int:
    """One splitmix64 output for the given state (finalizer only)."""
    z = (state + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def derive_seed(seed: int, stream: int) -> int:
    """Seed for sub-stream `stream`: element `stream` of the splitmix64
    sequence started at `seed`."""
    return splitmix64((check_seed(seed) + stream * _GOLDEN) & _MASK64)


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(check_seed(seed)))
