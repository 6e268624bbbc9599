# -*- coding: utf-8 -*-
"""
Counter-based random streams. Every stream is addressed by (seed, key...) rather than by the
order in which it's consumed, so parallel runs draw exactly what a serial run draws.
"""
from __future__ import annotations

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def derived_seed(seed: int, *key: int) -> int:
    """
    A 63-bit integer seed for the substream (seed, key...). Handy to hand a substream to
    something that only takes an integer, like `simulate --seed`.
    """
    state = np.random.SeedSequence(seed, spawn_key=key).generate_state(2, dtype=np.uint32)
    return int((int(state[0]) << 31) ^ int(state[1]))
