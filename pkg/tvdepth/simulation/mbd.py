# -*- coding: utf-8 -*-
"""
Modified band depth (bands of two curves): the time-average of the fraction of curve pairs
{X_a, X_b} with min(X_a(t), X_b(t)) ≤ X_j(t) ≤ max(X_a(t), X_b(t)).

With L = #{k : X_k(t) ≤ x} and U = #{k : X_k(t) ≥ x} (both counting x's own curve), the pairs
missing x are the ones lying entirely below or entirely above it:

    covering pairs = C(n,2) - C(n-U, 2) - C(n-L, 2)
"""
from __future__ import annotations

import numpy as np

from tvdepth.depth import sorted_columns
from tvdepth.exc import InsufficientDataError
from tvdepth.structs import FunctionalDataset


def _pairs(k: np.ndarray) -> np.ndarray:
    return k * (k - 1) // 2


def mbd(ds: FunctionalDataset) -> np.ndarray:
    n = ds.n
    if n < 2:
        raise InsufficientDataError("Band depth needs at least 2 curves.")

    columns = sorted_columns(ds)
    covered = np.empty(ds.values.shape, dtype=np.int64)
    for i in range(ds.m):
        at_or_below = np.searchsorted(columns[:, i], ds.values[:, i], side="right")
        at_or_above = n - np.searchsorted(columns[:, i], ds.values[:, i], side="left")
        covered[:, i] = _pairs(np.int64(n)) - _pairs(n - at_or_above) - _pairs(n - at_or_below)

    return covered.mean(axis=1) / _pairs(np.int64(n))
