# -*- coding: utf-8 -*-
"""
Empirical total variation depth.

For a query curve f and a dataset X_1..X_n observed on t_1..t_m:

    p̂(t_i) = #{j : X_j(t_i) ≤ f(t_i)} / n
    D̂(t_i) = p̂(t_i)·(1 - p̂(t_i))
    TVD(f) = Σ_i w(t_i)·D̂(t_i)

A sample curve ranked against its own dataset counts itself, so p̂ ≥ 1/n for rows.
Comparisons are exact `≤` on stored floats.
"""
from __future__ import annotations

from typing import Iterable
from typing import Optional
from typing import Sequence

import numpy as np

from tvdepth import types as pt
from tvdepth.exc import AlignmentError
from tvdepth.exc import DegenerateWeightsError
from tvdepth.exc import DomainError
from tvdepth.exc import InsufficientDataError
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import Grid


def as_query(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (ds.m,):
        raise AlignmentError(f"Query curve has shape {f.shape}, expected ({ds.m},) to match the grid.")
    if not np.all(np.isfinite(f)):
        raise DomainError("Query curve must be finite.")
    return f


def sorted_columns(ds: FunctionalDataset) -> np.ndarray:
    return np.sort(ds.values, axis=0)


def count_at_or_below(sorted_column: np.ndarray, x: np.ndarray | float) -> np.ndarray:
    return np.searchsorted(sorted_column, x, side="right")


def pointwise_rank_counts(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> np.ndarray:
    f = as_query(ds, f)
    columns = sorted_columns(ds)
    return np.array([count_at_or_below(columns[:, i], f[i]) for i in range(ds.m)], dtype=np.int64)


def pointwise_rank_counts_all(ds: FunctionalDataset) -> np.ndarray:
    """
    #{k : X_k(t_i) ≤ X_j(t_i)} for every sample curve j, as an n×m integer matrix.
    """
    columns = sorted_columns(ds)
    counts = np.empty(ds.values.shape, dtype=np.int64)
    for i in range(ds.m):
        counts[:, i] = count_at_or_below(columns[:, i], ds.values[:, i])
    return counts


def pointwise_rank_proportions(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> np.ndarray:
    return pointwise_rank_counts(ds, f) / ds.n


def pointwise_rank_proportions_all(ds: FunctionalDataset) -> np.ndarray:
    return pointwise_rank_counts_all(ds) / ds.n


def pointwise_depth(p_hat: Sequence[float] | np.ndarray) -> np.ndarray:
    p_hat = np.asarray(p_hat, dtype=float)
    if not np.all(np.isfinite(p_hat)) or np.any((p_hat < 0) | (p_hat > 1)):
        raise DomainError("Proportions must lie in [0, 1].")
    return p_hat * (1 - p_hat)


def pointwise_depth_from_counts(counts: np.ndarray, n: int) -> np.ndarray:
    # c(n-c)/n² is exact in the integers, so p̂ and 1-p̂ give bitwise-equal depths
    counts = np.asarray(counts, dtype=np.int64)
    return (counts * (n - counts)) / float(n * n)


def weight_uniform(grid: Grid | int) -> np.ndarray:
    m = grid if isinstance(grid, int) else grid.m
    if m < 1:
        raise InsufficientDataError("Need at least one grid point.")
    return np.full(m, 1.0 / m)


def weight_sd(ds: FunctionalDataset) -> np.ndarray:
    """
    ŵ(t_i) = sd(t_i) / Σ_r sd(t_r), with the sample (n-1) standard deviation.
    """
    if ds.n < 2:
        raise InsufficientDataError("Standard-deviation weights need at least 2 curves.")

    sd = ds.values.std(axis=0, ddof=1)
    total = sd.sum()
    if total <= 0:
        raise DegenerateWeightsError("Every column is constant, so standard-deviation weights are undefined.")
    return sd / total


def resolve_weights(
    ds: FunctionalDataset, weight_choice: pt.WeightChoice, fallback_to_uniform: bool = False
) -> tuple[np.ndarray, pt.WeightChoice]:
    """
    Returns the weight vector and the choice that produced it. With `fallback_to_uniform`,
    degenerate sd weights become uniform weights (with a warning) instead of raising.
    """
    if weight_choice == "uniform":
        return weight_uniform(ds.grid), "uniform"
    elif weight_choice == "sd":
        try:
            return weight_sd(ds), "sd"
        except (DegenerateWeightsError, InsufficientDataError) as e:
            if not fallback_to_uniform:
                raise e

            from tvdepth.logging import create_logger

            create_logger("depth").warning(f"{e} Falling back to uniform weights.")
            return weight_uniform(ds.grid), "uniform"
    else:
        raise DomainError(f"Unknown weight choice `{weight_choice}`. Use `sd` or `uniform`.")


def check_weights(ds: FunctionalDataset, w: Sequence[float] | np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != (ds.m,):
        raise AlignmentError(f"Weights have shape {w.shape}, expected ({ds.m},).")
    if np.any(w < 0):
        raise DomainError("Weights must be non-negative.")
    if abs(w.sum() - 1.0) > 1e-12:
        raise DomainError(f"Weights must sum to 1, got {w.sum()}.")
    return w


def tvd(ds: FunctionalDataset, f: Sequence[float] | np.ndarray, w: Sequence[float] | np.ndarray) -> float:
    w = check_weights(ds, w)
    d_hat = pointwise_depth_from_counts(pointwise_rank_counts(ds, f), ds.n)
    return float(w @ d_hat)


def tvd_all(
    ds: FunctionalDataset,
    weight_choice: pt.WeightChoice | np.ndarray = "sd",
    counts: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    TVD of each sample curve against the full sample. Entry j equals tvd(ds, ds.values[j], w).
    Pass `counts` to reuse `pointwise_rank_counts_all(ds)` if it's already computed.
    """
    if isinstance(weight_choice, np.ndarray):
        w = check_weights(ds, weight_choice)
    else:
        w, _ = resolve_weights(ds, weight_choice)

    if counts is None:
        counts = pointwise_rank_counts_all(ds)
    return pointwise_depth_from_counts(counts, ds.n) @ w


def pointwise_median(ds: FunctionalDataset) -> np.ndarray:
    # even n: mean of the two middle order statistics
    return np.median(ds.values, axis=0)


def depth_order(depths: Sequence[float] | np.ndarray, excluded: Iterable[int] = ()) -> np.ndarray:
    """
    Indices of non-excluded curves, deepest first. Equal depths keep index order.
    """
    depths = np.asarray(depths, dtype=float)
    mask = np.ones(depths.size, dtype=bool)
    mask[list(excluded)] = False
    candidates = np.flatnonzero(mask)
    return candidates[np.argsort(-depths[candidates], kind="stable")]
