# -*- coding: utf-8 -*-
"""
Shape variation (SV) and modified shape variation (MSV).

For each adjacent pair (t_{i-1}, t_i) the pointwise depth D̂(t_i) splits into a shape
component V̂ (the variance of R_f(t_i) explained by R_f(t_{i-1})) and a magnitude
component M̂, with V̂ + M̂ = D̂ exactly at the sample level. The shape ratio Ŝ = V̂ / D̂
is averaged with weights v̂ proportional to |f(t_i) - f(t_{i-1})|.

MSV first moves each pair so that its second coordinate sits on the pointwise median,
keeping the increment f(t_i) - f(t_{i-1}).

Pair indices are 0-based: pair i is (t_{i-1}, t_i) for i in 1..m-1.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from tvdepth.depth import as_query
from tvdepth.depth import pointwise_median
from tvdepth.exc import DomainError
from tvdepth.exc import InsufficientDataError
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import PairProportions
from tvdepth.structs import ShapeProfile
from tvdepth.utils.math_helpers import safe_divide

# bounds the size of the boolean blocks used for joint counts
_BLOCK_ELEMENTS = 2**22


def _check_pair_index(ds: FunctionalDataset, i: int) -> None:
    if not (1 <= i < ds.m):
        raise DomainError(f"Pair index must be in 1..{ds.m - 1}, got {i}.")


def _pair_counts(
    prev_column: np.ndarray, cur_column: np.ndarray, a: np.ndarray, b: np.ndarray | float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    For query pairs (a_q, b_q) against rows (prev_k, cur_k), count
      #{k: prev_k ≤ a_q},  #{k: cur_k ≤ b_q},  #{k: prev_k ≤ a_q and cur_k ≤ b_q}.

    A scalar `b` (every query shares its second coordinate) reduces the joint count to a
    sorted search within the rows below b.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    below_prev = np.searchsorted(np.sort(prev_column), a, side="right")

    if np.ndim(b) == 0:
        rows_below = cur_column <= b
        below_cur = np.full(a.shape, int(rows_below.sum()))
        joint_below = np.searchsorted(np.sort(prev_column[rows_below]), a, side="right")
        return below_prev, below_cur, joint_below

    b = np.asarray(b, dtype=float)
    below_cur = np.searchsorted(np.sort(cur_column), b, side="right")
    joint_below = np.empty(a.shape, dtype=np.int64)
    block = max(1, _BLOCK_ELEMENTS // prev_column.size)
    for start in range(0, a.size, block):
        rows = slice(start, start + block)
        joint_below[rows] = (
            (prev_column[None, :] <= a[rows, None]) & (cur_column[None, :] <= b[rows, None])
        ).sum(axis=1)
    return below_prev, below_cur, joint_below


def _proportions(
    ds: FunctionalDataset, i: int, a: np.ndarray, b: np.ndarray | float
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    below_prev, below_cur, joint_below = _pair_counts(ds.values[:, i - 1], ds.values[:, i], a, b)
    n = ds.n
    return below_prev / n, below_cur / n, joint_below / n, (below_cur - joint_below) / n


def _components(
    p_prev: np.ndarray, p_cur: np.ndarray, joint_below: np.ndarray, joint_above: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    (V̂, M̂) with every 0/0 term taken as 0.
    """
    total = p_cur * (1 - p_cur)

    explained = safe_divide(joint_below**2, p_prev) + safe_divide(joint_above**2, 1 - p_prev)
    shape = np.clip(explained - p_cur**2, 0.0, total)

    q1 = safe_divide(joint_below, p_prev)
    q2 = safe_divide(joint_above, 1 - p_prev)
    magnitude = p_prev * q1 * (1 - q1) + (1 - p_prev) * q2 * (1 - q2)
    return shape, magnitude


def _ratios(p_prev: np.ndarray, p_cur: np.ndarray, joint_below: np.ndarray, joint_above: np.ndarray) -> np.ndarray:
    shape, _ = _components(p_prev, p_cur, joint_below, joint_above)
    total = p_cur * (1 - p_cur)
    degenerate = (p_cur == 0) | (p_cur == 1)
    return np.where(degenerate, 1.0, np.clip(safe_divide(shape, total), 0.0, 1.0))


def pair_proportions(ds: FunctionalDataset, f: Sequence[float] | np.ndarray, i: int) -> PairProportions:
    f = as_query(ds, f)
    _check_pair_index(ds, i)
    p_prev, p_cur, joint_below, joint_above = _proportions(ds, i, f[i - 1 : i], f[i : i + 1])
    return PairProportions(
        p_prev=float(p_prev[0]),
        p_cur=float(p_cur[0]),
        p_joint_below=float(joint_below[0]),
        p_joint_above=float(joint_above[0]),
    )


def _as_arrays(pp: PairProportions) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    return (
        np.asarray(pp.p_prev),
        np.asarray(pp.p_cur),
        np.asarray(pp.p_joint_below),
        np.asarray(pp.p_joint_above),
    )


def shape_component(pp: PairProportions) -> float:
    shape, _ = _components(*_as_arrays(pp))
    return float(shape)


def magnitude_component(pp: PairProportions) -> float:
    _, magnitude = _components(*_as_arrays(pp))
    return float(magnitude)


def shape_ratio(pp: PairProportions) -> float:
    return float(_ratios(*_as_arrays(pp)))


def weight_v(f: Sequence[float] | np.ndarray) -> np.ndarray:
    """
    v̂(t_i) = |f(t_i) - f(t_{i-1})| / Σ_r |f(t_r) - f(t_{r-1})|, uniform for constant f.
    """
    return weight_v_all(np.atleast_2d(np.asarray(f, dtype=float)))[0]


def weight_v_all(values: np.ndarray) -> np.ndarray:
    if values.shape[1] < 2:
        raise InsufficientDataError("Shape weights need at least 2 grid points.")

    increments = np.abs(np.diff(values, axis=1))
    totals = increments.sum(axis=1, keepdims=True)
    uniform = np.full_like(increments, 1.0 / increments.shape[1])
    return np.where(totals > 0, safe_divide(increments, totals), uniform)


def _shifted_first_coordinates(values: np.ndarray, median: np.ndarray, i: int) -> np.ndarray:
    # (f(t_{i-1}), f(t_i)) - Δ with Δ = f(t_i) - median(t_i); the second coordinate is the median itself
    delta = values[:, i] - median[i]
    return values[:, i - 1] - delta


def shape_ratios_all(ds: FunctionalDataset, shifted: bool = False) -> np.ndarray:
    """
    n×(m-1) matrix of Ŝ for every sample curve against the full sample.
    """
    if ds.m < 2:
        raise InsufficientDataError("Shape variation needs at least 2 grid points.")

    ratios = np.empty((ds.n, ds.m - 1))
    median = pointwise_median(ds) if shifted else None

    for i in range(1, ds.m):
        if median is not None:
            a = _shifted_first_coordinates(ds.values, median, i)
            b: np.ndarray | float = float(median[i])
        else:
            a, b = ds.values[:, i - 1], ds.values[:, i]
        ratios[:, i - 1] = _ratios(*_proportions(ds, i, a, b))

    return ratios


def shape_ratios(ds: FunctionalDataset, f: Sequence[float] | np.ndarray, shifted: bool = False) -> np.ndarray:
    """
    Ŝ_f(t_i; t_{i-1}) for i = 1..m-1, of one query curve.
    """
    f = as_query(ds, f)
    median = pointwise_median(ds) if shifted else None
    ratios = np.empty(ds.m - 1)

    for i in range(1, ds.m):
        if median is not None:
            a = _shifted_first_coordinates(f[None, :], median, i)
            b: np.ndarray | float = float(median[i])
        else:
            a, b = f[i - 1 : i], f[i : i + 1]
        ratios[i - 1] = _ratios(*_proportions(ds, i, a, b))[0]

    return ratios


def sv(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> float:
    f = as_query(ds, f)
    return float(weight_v(f) @ shape_ratios(ds, f))


def msv(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> float:
    f = as_query(ds, f)
    # increments are unchanged by the shift, so v̂ comes from f
    return float(weight_v(f) @ shape_ratios(ds, f, shifted=True))


def shape_profile(ds: FunctionalDataset, f: Sequence[float] | np.ndarray) -> ShapeProfile:
    f = as_query(ds, f)
    v = weight_v(f)
    s = shape_ratios(ds, f)
    s_shifted = shape_ratios(ds, f, shifted=True)
    return ShapeProfile(
        s_pointwise=s.tolist(),
        v_weights=v.tolist(),
        sv=float(v @ s),
        msv=float(v @ s_shifted),
    )


def sv_all(ds: FunctionalDataset) -> np.ndarray:
    return np.einsum("ij,ij->i", weight_v_all(ds.values), shape_ratios_all(ds))


def msv_all(ds: FunctionalDataset) -> np.ndarray:
    return np.einsum("ij,ij->i", weight_v_all(ds.values), shape_ratios_all(ds, shifted=True))
