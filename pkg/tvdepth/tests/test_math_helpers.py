# -*- coding: utf-8 -*-
# test_math_helpers
from __future__ import annotations

import numpy as np
import pytest

from tvdepth.utils.math_helpers import count_from_proportion
from tvdepth.utils.math_helpers import mean_and_sd
from tvdepth.utils.math_helpers import quartiles
from tvdepth.utils.math_helpers import safe_divide
from tvdepth.utils.math_helpers import spearman_correlation


def test_quartiles_interpolate_linearly() -> None:
    assert quartiles([1, 2, 3, 4, 5]) == (2.0, 4.0)
    assert quartiles([1, 2, 3, 4]) == (1.75, 3.25)


def test_mean_and_sd() -> None:
    assert mean_and_sd([1, 2, 3]) == (2.0, 1.0)
    assert mean_and_sd([4.0]) == (4.0, 0.0)
    with pytest.raises(ValueError):
        mean_and_sd([])


def test_count_from_proportion() -> None:
    assert count_from_proportion(0.5, 100) == 50
    assert count_from_proportion(0.5, 3) == 2
    assert count_from_proportion(0.7, 10) == 7
    assert count_from_proportion(0.001, 10) == 1


def test_safe_divide() -> None:
    assert safe_divide(np.array([1.0, 0.0, 2.0]), np.array([2.0, 0.0, 0.0])).tolist() == [0.5, 0.0, 0.0]


def test_spearman_correlation() -> None:
    assert spearman_correlation([1, 2, 3, 4], [10, 20, 30, 40]) == pytest.approx(1.0)
    assert spearman_correlation([1, 2, 3, 4], [4, 3, 2, 1]) == pytest.approx(-1.0)
