# -*- coding: utf-8 -*-
# test_mbd
from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from tvdepth.depth import tvd_all
from tvdepth.exc import InsufficientDataError
from tvdepth.simulation.mbd import mbd
from tvdepth.simulation.models import simulate
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import ModelSpec
from tvdepth.utils.math_helpers import spearman_correlation


def brute_force_mbd(values: np.ndarray) -> np.ndarray:
    n, m = values.shape
    pairs = list(combinations(range(n), 2))
    depths = np.zeros(n)
    for j in range(n):
        covered = 0
        for a, b in pairs:
            low = np.minimum(values[a], values[b])
            high = np.maximum(values[a], values[b])
            covered += int(((low <= values[j]) & (values[j] <= high)).sum())
        depths[j] = covered / (len(pairs) * m)
    return depths


def test_mbd_of_fix_a(fix_a) -> None:
    assert mbd(fix_a) == pytest.approx([2 / 3, 1.0, 2 / 3], abs=1e-12)


def test_two_curves_are_both_fully_deep() -> None:
    assert mbd(FunctionalDataset.from_values([[0, 5], [1, -1]])).tolist() == [1.0, 1.0]


def test_mbd_needs_two_curves() -> None:
    with pytest.raises(InsufficientDataError):
        mbd(FunctionalDataset.from_values([[0.0, 1.0]]))


def test_mbd_matches_pair_enumeration(rng) -> None:
    for _ in range(30):
        values = rng.integers(0, 4, size=(int(rng.integers(2, 12)), 4)).astype(float)
        ds = FunctionalDataset.from_values(values)
        assert mbd(ds) == pytest.approx(brute_force_mbd(values), abs=1e-12)


def test_mbd_and_uniform_tvd_rank_curves_alike() -> None:
    correlations = [
        spearman_correlation(mbd(ds), tvd_all(ds, "uniform"))
        for ds in (simulate(ModelSpec(model_id=1, seed=seed)).dataset for seed in range(10))
    ]
    assert np.mean(correlations) >= 0.99


@pytest.mark.slow
def test_mbd_and_uniform_tvd_rank_curves_alike_on_50_datasets() -> None:
    correlations = [
        spearman_correlation(mbd(ds), tvd_all(ds, "uniform"))
        for ds in (simulate(ModelSpec(model_id=1, seed=1000 + seed)).dataset for seed in range(50))
    ]
    assert np.mean(correlations) >= 0.99
