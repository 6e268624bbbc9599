# -*- coding: utf-8 -*-
from __future__ import annotations

from math import ceil
from typing import Sequence

import numpy as np


def quartiles(x: Sequence[float] | np.ndarray) -> tuple[float, float]:
    """
    Q1 and Q3 by linear interpolation: quantile q sits at position q·(n-1) of the sorted sample.
    """
    q1, q3 = np.quantile(np.asarray(x, dtype=float), [0.25, 0.75], method="linear")
    return float(q1), float(q3)


def mean_and_sd(x: Sequence[float]) -> tuple[float, float]:
    """
    Sample mean and sample (ddof=1) standard deviation. One value has sd 0.
    """
    arr = np.asarray(x, dtype=float)
    if arr.size == 0:
        raise ValueError("No values provided!")
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1))


def spearman_correlation(x: Sequence[float], y: Sequence[float]) -> float:
    from scipy.stats import spearmanr

    assert len(x) == len(y), "Array sizes are not equal."
    return float(spearmanr(x, y).statistic)


def count_from_proportion(proportion: float, n: int) -> int:
    """
    ⌈proportion·n⌉, ignoring float noise like 0.7*10 = 7.000000000000001.
    """
    return max(1, ceil(proportion * n - 1e-9))


def safe_divide(numerator: np.ndarray, denominator: np.ndarray) -> np.ndarray:
    """
    Elementwise numerator / denominator with x/0 := 0.
    """
    numerator = np.asarray(numerator, dtype=float)
    denominator = np.asarray(denominator, dtype=float)
    out = np.zeros(np.broadcast(numerator, denominator).shape)
    return np.divide(numerator, denominator, out=out, where=denominator != 0)
