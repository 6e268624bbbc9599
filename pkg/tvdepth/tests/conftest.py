# -*- coding: utf-8 -*-
from __future__ import annotations

import numpy as np
import pytest

from tvdepth.structs import FunctionalDataset


@pytest.fixture
def fix_a() -> FunctionalDataset:
    return FunctionalDataset.from_values([[0, 0], [1, 1], [2, 2]], grid=[0, 1])


@pytest.fixture
def fix_b() -> FunctionalDataset:
    return FunctionalDataset.from_values([[0, 0], [1, 1], [2, 2], [3, 3]], grid=[0, 1])


@pytest.fixture
def fix_a_spike() -> FunctionalDataset:
    return FunctionalDataset.from_values([[0, 0], [1, 1], [5, 5]], grid=[0, 1])


@pytest.fixture
def model_1():
    from tvdepth.simulation.models import simulate
    from tvdepth.structs import ModelSpec

    return simulate(ModelSpec(model_id=1, n=100, m=50, seed=2024)).dataset


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
